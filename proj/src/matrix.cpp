#include "hyperquadric/matrix.hpp"

#include <sstream>

namespace hq {

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionError("ragged matrix initializer");
        for (const auto& v : r) data_.push_back(v);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

std::vector<GaussianRational> Matrix::row(int i) const {
    return std::vector<GaussianRational>(data_.begin() + static_cast<std::size_t>(i) * cols_,
                                         data_.begin() + static_cast<std::size_t>(i + 1) * cols_);
}

void Matrix::set_row(int i, const std::vector<GaussianRational>& v) {
    if (static_cast<int>(v.size()) != cols_) throw DimensionError("row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::size_t>(i) * cols_);
}

void Matrix::append_row(const std::vector<GaussianRational>& v) {
    if (cols_ == 0 && rows_ == 0) cols_ = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != cols_) throw DimensionError("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GaussianRational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) += aik * o.at(k, j);
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

Matrix Matrix::scaled(const GaussianRational& c) const {
    Matrix out = *this;
    for (auto& v : out.data_) v *= c;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::conj_transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

bool Matrix::is_hermitian() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

int Matrix::rref(std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows_; ++i)
            if (!at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(lead, j));
        GaussianRational inv = GaussianRational(1) / at(lead, col);
        for (int j = col; j < cols_; ++j) at(lead, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == lead || at(i, col).is_zero()) continue;
            GaussianRational f = at(i, col);
            for (int j = col; j < cols_; ++j) at(i, j) -= f * at(lead, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++lead;
    }
    return lead;
}

int Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref();
}

Matrix Matrix::kernel() const {
    Matrix work = *this;
    std::vector<int> pivots;
    int rk = work.rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;

    Matrix out(cols_ - rk, cols_);
    int row_out = 0;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        out.at(row_out, free_col) = GaussianRational(1);
        for (int i = 0; i < rk; ++i) out.at(row_out, pivots[i]) = -work.at(i, free_col);
        ++row_out;
    }
    out.rref();
    return out;
}

GaussianRational Matrix::det() const {
    if (rows_ != cols_) throw DimensionError("determinant of non-square matrix");
    Matrix work = *this;
    GaussianRational result(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (!work.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return GaussianRational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            result = -result;
        }
        result *= work.at(col, col);
        GaussianRational inv = GaussianRational(1) / work.at(col, col);
        for (int i = col + 1; i < rows_; ++i) {
            if (work.at(i, col).is_zero()) continue;
            GaussianRational f = work.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) work.at(i, j) -= f * work.at(col, j);
        }
    }
    return result;
}

GaussianRational Matrix::leading_principal_minor(int k) const {
    if (k < 0 || k > rows_ || k > cols_) throw DimensionError("minor size out of range");
    Matrix block(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) block.at(i, j) = at(i, j);
    return block.det();
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionError("inverse of non-square matrix");
    Matrix work(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) work.at(i, j) = at(i, j);
        work.at(i, cols_ + i) = GaussianRational(1);
    }
    int rk = work.rref();
    if (rk != rows_) throw RankError("matrix is singular");
    Matrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = work.at(i, cols_ + j);
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "[") << at(i, j);
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

namespace {

// b_target += c * b_source, applied as a congruence on both sides of H and
// recorded in P.
void mix_rows(Matrix& h, Matrix& p, int target, int source, const GaussianRational& c) {
    int n = h.rows();
    for (int j = 0; j < n; ++j) h.at(target, j) += c * h.at(source, j);
    for (int j = 0; j < n; ++j) h.at(j, target) += c.conj() * h.at(j, source);
    for (int j = 0; j < p.cols(); ++j) p.at(target, j) += c * p.at(source, j);
}

void swap_rows(Matrix& h, Matrix& p, int a, int b) {
    int n = h.rows();
    for (int j = 0; j < n; ++j) std::swap(h.at(a, j), h.at(b, j));
    for (int j = 0; j < n; ++j) std::swap(h.at(j, a), h.at(j, b));
    for (int j = 0; j < p.cols(); ++j) std::swap(p.at(a, j), p.at(b, j));
}

}  // namespace

Congruence congruence_diagonalize(const Matrix& gram) {
    if (!gram.is_hermitian()) throw InvalidOperandError("congruence diagonalization needs a Hermitian matrix");
    int n = gram.rows();
    Matrix h = gram;
    Matrix p = Matrix::identity(n);

    for (int i = 0; i < n; ++i) {
        if (h.at(i, i).is_zero()) {
            // Prefer an existing nonzero diagonal entry further down.
            int d = -1;
            for (int j = i + 1; j < n; ++j)
                if (!h.at(j, j).is_zero()) {
                    d = j;
                    break;
                }
            if (d >= 0) {
                swap_rows(h, p, i, d);
            } else {
                // All remaining diagonal entries vanish; look for an
                // off-diagonal pairing to repair the pivot.
                int a = -1, b = -1;
                for (int x = i; x < n && a < 0; ++x)
                    for (int y = x + 1; y < n; ++y)
                        if (!h.at(x, y).is_zero()) {
                            a = x;
                            b = y;
                            break;
                        }
                if (a < 0) break;  // the remaining block is identically zero
                const GaussianRational& g = h.at(a, b);
                // <b_a + c b_b, b_a + c b_b> = 2 Re(c * conj(g)); pick c so
                // this is nonzero.
                GaussianRational c = (g.re() != 0) ? GaussianRational(1) : GaussianRational::i();
                mix_rows(h, p, a, b, c);
                if (a != i) swap_rows(h, p, i, a);
            }
        }
        if (h.at(i, i).is_zero()) break;
        GaussianRational inv = GaussianRational(1) / h.at(i, i);
        for (int j = i + 1; j < n; ++j) {
            if (h.at(j, i).is_zero()) continue;
            mix_rows(h, p, j, i, -(h.at(j, i) * inv));
        }
    }

    Congruence out;
    out.transform = std::move(p);
    out.diagonal.reserve(n);
    for (int i = 0; i < n; ++i) {
        const GaussianRational& d = h.at(i, i);
        if (d.im() != 0) throw Error("internal: congruence produced a non-real diagonal entry");
        out.diagonal.push_back(d.re());
    }
    return out;
}

Inertia hermitian_inertia(const Matrix& gram) {
    Congruence c = congruence_diagonalize(gram);
    Inertia in;
    for (const Rational& d : c.diagonal) {
        if (d > 0)
            ++in.pos;
        else if (d < 0)
            ++in.neg;
        else
            ++in.zero;
    }
    return in;
}

bool is_positive_definite(const Matrix& gram) {
    if (!gram.is_hermitian()) throw InvalidOperandError("positive definiteness needs a Hermitian matrix");
    for (int k = 1; k <= gram.rows(); ++k) {
        GaussianRational minor = gram.leading_principal_minor(k);
        if (minor.im() != 0) throw Error("internal: Hermitian minor is not real");
        if (minor.re() <= 0) return false;
    }
    return true;
}

}  // namespace hq
