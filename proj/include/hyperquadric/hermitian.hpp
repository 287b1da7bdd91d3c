#pragma once

#include <optional>
#include <vector>

#include "hyperquadric/matrix.hpp"
#include "hyperquadric/signature.hpp"

namespace hq {

// A point of C^{r,s,t} in homogeneous coordinates.
struct Vector {
    std::vector<GaussianRational> coords;
    Signature sig;

    Vector() = default;
    Vector(std::vector<GaussianRational> c, Signature s);

    int n() const { return sig.n(); }
    bool is_zero() const;

    static Vector unit(int index, Signature sig);  // 0-based e_index
};

// <z,w> = sum_{j<r} z_j conj(w_j) - sum_{r<=j<r+s} z_j conj(w_j).
// Linear in the first argument, conjugate-linear in the second.
GaussianRational pairing(const Vector& z, const Vector& w);

enum class SignKind { Positive, Negative, Null };

// Sign classification of a nonzero point. `special` is meaningful only for
// null points: true iff the point pairs to zero with the whole ambient space
// (equivalently, its first r+s coordinates vanish).
struct PointSign {
    SignKind kind;
    bool special = false;
};

PointSign point_sign(const Vector& z);

// A linear subspace of C^{r,s,t}, stored as a reduced-row-echelon basis so
// that equality of subspaces is equality of representations.
class Subspace {
public:
    // The zero subspace of the given ambient space.
    explicit Subspace(Signature ambient);

    // Span of the given vectors (rows); dependent spanning sets are allowed
    // and reduced.
    static Subspace span(const std::vector<Vector>& vectors, Signature ambient);
    static Subspace span_rows(Matrix rows, Signature ambient);

    // Requires the rows to be independent (rank == row count).
    static Subspace from_basis(Matrix rows, Signature ambient);

    static Subspace whole(Signature ambient);

    const Signature& ambient() const { return ambient_; }
    const Matrix& basis() const { return basis_; }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }

    Vector basis_vector(int i) const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    // Gram matrix of the echelon basis under the ambient pairing.
    Matrix gram() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    // True iff every basis vector is a standard unit vector, i.e. the
    // subspace is spanned by coordinate axes.
    bool is_coordinate_aligned() const;
    std::vector<int> coordinate_axes() const;  // valid when aligned

    std::string to_string() const;

private:
    Signature ambient_;
    Matrix basis_;  // RREF, rows = basis vectors
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

// {w : pairing(v,w)=0 for all v in S}. Dimension is at least n - dim S, with
// excess exactly when the pairing functionals of S are dependent.
Subspace orthogonal_complement(const Subspace& s);

// Inertia (a,b,c) of the restricted form, via exact congruence
// diagonalization of the Gram matrix. Basis-independent by Sylvester.
Inertia subspace_signature(const Subspace& s);

// a = b = 0, i.e. the restricted form vanishes identically.
bool is_null_subspace(const Subspace& s);

// Maximum projective dimension of null subspaces: min{r,s} + t - 1.
// -1 means the space has no null points at all.
int max_null_dimension(const Signature& sig);

}  // namespace hq
