#pragma once

#include <initializer_list>
#include <vector>

#include "hyperquadric/rational.hpp"

namespace hq {

// Dense matrix over the Gaussian rationals. Sizes here are tiny (ambient
// dimensions are single digits), so the implementation favors exactness and
// clarity over asymptotics.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    GaussianRational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const GaussianRational& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    std::vector<GaussianRational> row(int i) const;
    void set_row(int i, const std::vector<GaussianRational>& v);
    void append_row(const std::vector<GaussianRational>& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const GaussianRational& c) const;

    Matrix transpose() const;
    Matrix conj_transpose() const;

    bool is_zero() const;
    bool is_hermitian() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // In-place reduced row echelon form. Returns the rank; records the pivot
    // column of each nonzero row when requested.
    int rref(std::vector<int>* pivot_cols = nullptr);

    int rank() const;

    // Row basis of {x : M x = 0} (column-vector kernel), in RREF.
    Matrix kernel() const;

    GaussianRational det() const;

    // Determinant of the leading principal k x k block.
    GaussianRational leading_principal_minor(int k) const;

    // Inverse of a square nonsingular matrix; throws RankError otherwise.
    Matrix inverse() const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GaussianRational> data_;
};

// Result of exact Hermitian congruence diagonalization: transform * G *
// transform^H == diag(diagonal), with real rational diagonal entries.
struct Congruence {
    Matrix transform;
    std::vector<Rational> diagonal;
};

// Symmetric Gaussian elimination on a Hermitian matrix. Zero pivots are
// repaired by mixing in a row that pairs nontrivially (b_i += b_j or
// b_i += i*b_j), which always produces a nonzero real diagonal entry.
Congruence congruence_diagonalize(const Matrix& gram);

// Counts of positive / negative / zero diagonal entries after congruence
// diagonalization. Well defined by Sylvester's law of inertia.
struct Inertia {
    int pos = 0;
    int neg = 0;
    int zero = 0;

    friend bool operator==(const Inertia& a, const Inertia& b) {
        return a.pos == b.pos && a.neg == b.neg && a.zero == b.zero;
    }
    std::string to_string() const {
        return "(" + std::to_string(pos) + "," + std::to_string(neg) + "," + std::to_string(zero) + ")";
    }
};

Inertia hermitian_inertia(const Matrix& gram);

// True iff the Hermitian matrix is positive definite, decided by positivity
// of all leading principal minors.
bool is_positive_definite(const Matrix& gram);

}  // namespace hq
