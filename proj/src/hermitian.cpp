#include "hyperquadric/hermitian.hpp"

#include <algorithm>
#include <sstream>

namespace hq {

Vector::Vector(std::vector<GaussianRational> c, Signature s) : coords(std::move(c)), sig(s) {
    if (static_cast<int>(coords.size()) != sig.n())
        throw DimensionError("vector length does not match signature");
}

bool Vector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const GaussianRational& v) { return v.is_zero(); });
}

Vector Vector::unit(int index, Signature sig) {
    std::vector<GaussianRational> c(sig.n());
    c.at(index) = GaussianRational(1);
    return Vector(std::move(c), sig);
}

GaussianRational pairing(const Vector& z, const Vector& w) {
    if (z.sig != w.sig) throw DimensionError("pairing requires matching signatures");
    GaussianRational acc;
    for (int j = 0; j < z.sig.r + z.sig.s; ++j) {
        GaussianRational term = z.coords[j] * w.coords[j].conj();
        if (j < z.sig.r)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

PointSign point_sign(const Vector& z) {
    if (z.is_zero()) throw InvalidOperandError("the zero vector has no projective sign");
    GaussianRational norm = pairing(z, z);
    if (norm.im() != 0) throw Error("internal: <z,z> is not real");
    PointSign out;
    if (norm.re() > 0) {
        out.kind = SignKind::Positive;
    } else if (norm.re() < 0) {
        out.kind = SignKind::Negative;
    } else {
        out.kind = SignKind::Null;
        out.special = true;
        for (int j = 0; j < z.sig.r + z.sig.s; ++j)
            if (!z.coords[j].is_zero()) {
                out.special = false;
                break;
            }
    }
    return out;
}

Subspace::Subspace(Signature ambient) : ambient_(ambient), basis_(0, ambient.n()) {}

Subspace Subspace::span_rows(Matrix rows, Signature ambient) {
    if (!rows.empty() && rows.cols() != ambient.n())
        throw DimensionError("basis width does not match ambient dimension");
    if (rows.empty()) rows = Matrix(0, ambient.n());
    int rank = rows.rref();
    Matrix basis(rank, ambient.n());
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < ambient.n(); ++j) basis.at(i, j) = rows.at(i, j);
    Subspace s(ambient);
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, Signature ambient) {
    Matrix rows(0, ambient.n());
    for (const Vector& v : vectors) {
        if (v.sig != ambient) throw DimensionError("spanning vector has wrong signature");
        rows.append_row(v.coords);
    }
    return span_rows(std::move(rows), ambient);
}

Subspace Subspace::from_basis(Matrix rows, Signature ambient) {
    int count = rows.rows();
    Subspace s = span_rows(std::move(rows), ambient);
    if (s.dim() != count) throw RankError("basis vectors are dependent");
    return s;
}

Subspace Subspace::whole(Signature ambient) {
    return span_rows(Matrix::identity(ambient.n()), ambient);
}

Vector Subspace::basis_vector(int i) const { return Vector(basis_.row(i), ambient_); }

bool Subspace::contains(const Vector& v) const {
    if (v.sig != ambient_) throw DimensionError("vector has wrong signature");
    Matrix stacked = basis_;
    stacked.append_row(v.coords);
    return stacked.rank() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("subspace has wrong ambient space");
    Matrix stacked = basis_;
    for (int i = 0; i < other.dim(); ++i) stacked.append_row(other.basis_.row(i));
    return stacked.rank() == dim();
}

Matrix Subspace::gram() const {
    int k = dim();
    Matrix g(k, k);
    for (int i = 0; i < k; ++i) {
        Vector vi = basis_vector(i);
        for (int j = 0; j < k; ++j) g.at(i, j) = pairing(vi, basis_vector(j));
    }
    return g;
}

bool Subspace::is_coordinate_aligned() const {
    for (int i = 0; i < basis_.rows(); ++i) {
        int nonzero = 0;
        for (int j = 0; j < basis_.cols(); ++j) {
            if (basis_.at(i, j).is_zero()) continue;
            ++nonzero;
            if (!basis_.at(i, j).is_one()) return false;
        }
        if (nonzero != 1) return false;
    }
    return true;
}

std::vector<int> Subspace::coordinate_axes() const {
    std::vector<int> axes;
    for (int i = 0; i < basis_.rows(); ++i)
        for (int j = 0; j < basis_.cols(); ++j)
            if (!basis_.at(i, j).is_zero()) {
                axes.push_back(j);
                break;
            }
    return axes;
}

std::string Subspace::to_string() const {
    Inertia abc = subspace_signature(*this);
    std::ostringstream os;
    os << "P^{" << abc.pos << "," << abc.neg;
    if (abc.zero) os << "," << abc.zero;
    os << "}: span{";
    if (is_coordinate_aligned()) {
        auto axes = coordinate_axes();
        for (std::size_t i = 0; i < axes.size(); ++i) os << (i ? ", " : "") << "e" << axes[i] + 1;
    } else {
        for (int i = 0; i < dim(); ++i) {
            os << (i ? ", " : "") << "(";
            for (int j = 0; j < basis_.cols(); ++j) os << (j ? ", " : "") << basis_.at(i, j);
            os << ")";
        }
    }
    os << "}";
    return os.str();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("ambient space mismatch");
    Matrix rows = a.basis();
    for (int i = 0; i < b.dim(); ++i) rows.append_row(b.basis().row(i));
    return Subspace::span_rows(std::move(rows), a.ambient());
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("ambient space mismatch");
    int n = a.ambient().n();
    // x = c * basis(a) = d * basis(b): solve [basis(a)^T | -basis(b)^T] (c,d)^T = 0.
    Matrix sys(n, a.dim() + b.dim());
    for (int j = 0; j < a.dim(); ++j)
        for (int i = 0; i < n; ++i) sys.at(i, j) = a.basis().at(j, i);
    for (int j = 0; j < b.dim(); ++j)
        for (int i = 0; i < n; ++i) sys.at(i, a.dim() + j) = -b.basis().at(j, i);
    Matrix ker = sys.kernel();
    Matrix rows(0, n);
    for (int k = 0; k < ker.rows(); ++k) {
        std::vector<GaussianRational> x(n);
        for (int j = 0; j < a.dim(); ++j)
            for (int i = 0; i < n; ++i) x[i] += ker.at(k, j) * a.basis().at(j, i);
        rows.append_row(x);
    }
    return Subspace::span_rows(std::move(rows), a.ambient());
}

Subspace orthogonal_complement(const Subspace& s) {
    const Signature& sig = s.ambient();
    int n = sig.n();
    // pairing(v, w) = 0  <=>  sum_j eps_j conj(v_j) w_j = 0 (conjugated).
    Matrix sys(s.dim(), n);
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < n; ++j)
            sys.at(i, j) = s.basis().at(i, j).conj() * GaussianRational(sig.eps(j));
    return Subspace::span_rows(sys.kernel(), sig);
}

Inertia subspace_signature(const Subspace& s) { return hermitian_inertia(s.gram()); }

bool is_null_subspace(const Subspace& s) { return s.gram().is_zero(); }

int max_null_dimension(const Signature& sig) { return std::min(sig.r, sig.s) + sig.t - 1; }

}  // namespace hq
