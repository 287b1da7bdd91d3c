#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperquadric/matrix.hpp"
#include "hyperquadric/rational.hpp"

namespace hq {

// Variable blocks of a polynomial: z_1..z_{z_vars} and, when w_vars > 0, the
// conjugated block w_1..w_{w_vars} (written w-bar in the theory; plain w in
// the text grammar).
struct VarLayout {
    int z_vars = 0;
    int w_vars = 0;

    int total() const { return z_vars + w_vars; }

    friend bool operator==(const VarLayout& a, const VarLayout& b) {
        return a.z_vars == b.z_vars && a.w_vars == b.w_vars;
    }
    friend bool operator!=(const VarLayout& a, const VarLayout& b) { return !(a == b); }
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> exps) : exps_(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<uint32_t>(nvars, 0)); }

    const std::vector<uint32_t>& exps() const { return exps_; }
    int nvars() const { return static_cast<int>(exps_.size()); }
    uint32_t exp(int v) const { return exps_[v]; }

    int total_degree() const;
    int degree_range(int begin, int end) const;  // sum of exponents in [begin,end)

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial divided_by(const Monomial& other) const;  // requires divisibility

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<uint32_t> exps_;
};

// Degree-lexicographic order with z1 > ... > zn > w1 > ... > wn, arranged as
// a "greater" comparator so that an ordered map iterates leading term first.
struct MonomialDegLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct Term {
    Monomial monomial;
    GaussianRational coeff;
};

// Sparse multivariate polynomial over the Gaussian rationals, homogeneous in
// each variable block. The zero polynomial carries no degree ("undefined");
// degree checks treat it as compatible with everything.
class Poly {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialDegLexGreater>;

    Poly() = default;
    explicit Poly(VarLayout vars) : vars_(vars) {}

    static Poly zero(VarLayout vars) { return Poly(vars); }
    static Poly constant(VarLayout vars, const GaussianRational& c);
    static Poly variable(VarLayout vars, int index);  // 0-based over z then w
    static Poly from_terms(VarLayout vars, const std::vector<Term>& terms);

    const VarLayout& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // -1 on the zero polynomial.
    int z_degree() const;
    int w_degree() const;
    int total_degree() const;

    bool is_constant() const;

    const Term leading() const;  // throws on zero

    void add_term(const Monomial& m, const GaussianRational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const GaussianRational& c) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Divide through by the leading coefficient.
    Poly monic() const;

    // Reinterpret a z-only polynomial inside a wider layout.
    Poly embedded(VarLayout wider) const;

    GaussianRational evaluate(const std::vector<GaussianRational>& zvals) const;
    GaussianRational evaluate2(const std::vector<GaussianRational>& zvals,
                               const std::vector<GaussianRational>& wvals) const;

    // Canonical text form in the polynomial grammar; "0" for the zero
    // polynomial. Terms appear in descending monomial order.
    std::string to_string() const;

    // Parse `text` against the expected layout. Enforces homogeneity in each
    // block. Throws ParseError with line/column on bad input.
    static Poly parse(const std::string& text, VarLayout vars);

private:
    void check_degrees(const Monomial& m) const;

    VarLayout vars_;
    TermMap terms_;
};

// Outcome of `reduce_by`. When the divisor divides the dividend, multiplicity
// is the largest k with divisor^k | dividend, quotient is the exact cofactor
// dividend / divisor^k, and remainder is zero. Otherwise multiplicity is 0,
// remainder is the (nonzero) normal form of the dividend modulo the divisor,
// and dividend = divisor * quotient + remainder.
struct DivisionResult {
    Poly quotient;
    Poly remainder;
    int multiplicity = 0;
};

// Single-step multivariate division: dividend = quotient * divisor +
// remainder, no term of the remainder divisible by the divisor's lead.
// A singleton divisor set is a Groebner basis of its principal ideal, so a
// zero remainder is a complete ideal-membership certificate.
void divide(const Poly& dividend, const Poly& divisor, Poly* quotient, Poly* remainder);

DivisionResult reduce_by(const Poly& dividend, const Poly& divisor);

// Exact quotient; throws if the division leaves a remainder.
Poly exact_div(const Poly& dividend, const Poly& divisor);

// GCD by recursive content/primitive-part extraction one variable at a time
// with a primitive pseudo-remainder sequence. Result is normalized so its
// leading coefficient in the monomial order is 1.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_gcd(const std::vector<Poly>& ps);

// Conjugate coefficients and move a z-block polynomial into the w-block of
// the doubled layout (n, n).
Poly conj_to_second_block(const Poly& p);

// p(M u): M maps a k-variable block to the n-variable block (n x k matrix of
// scalars); the result is homogeneous of the same degree in the k new
// variables. Requires p to live in the z-block.
Poly substitute_linear(const Poly& p, const Matrix& m);

}  // namespace hq
