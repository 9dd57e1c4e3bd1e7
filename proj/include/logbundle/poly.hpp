#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logbundle/matrix.hpp"
#include "logbundle/rational.hpp"

namespace logbundle {

using Exponent = std::vector<unsigned>;

// Graded lexicographic order, x0 > x1 > ...  `operator()` is "comes first",
// i.e. larger total degree first, then lexicographically larger.
struct GlexFirst {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// All exponent vectors of total degree `degree` in `n_vars` variables, in
// graded-lex order (x0^D first).
std::vector<Exponent> monomials_glex(std::size_t n_vars, unsigned degree);

// Values of monomials_glex(point.size(), degree) at `point`.
Vector monomial_values(std::span<const Rational> point, unsigned degree);

class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GlexFirst>;

    explicit MultiPoly(std::size_t n_vars = 0) : n_vars_(n_vars) {}

    static MultiPoly constant(std::size_t n_vars, const Rational& c);
    static MultiPoly variable(std::size_t n_vars, std::size_t i);
    static MultiPoly monomial(const Exponent& e, const Rational& c = 1);
    static MultiPoly linear(std::span<const Rational> coeffs);
    // Homogeneous degree-D form with the given coefficients on monomials_glex.
    static MultiPoly from_coefficients(std::size_t n_vars, unsigned degree,
                                       std::span<const Rational> coeffs);

    std::size_t n_vars() const noexcept { return n_vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Largest total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    // Coefficient vector on monomials_glex(n_vars, degree); terms of other
    // degrees are ignored.
    Vector coefficients(unsigned degree) const;

    Rational evaluate(std::span<const Rational> point) const;
    MultiPoly derivative(std::size_t var) const;

    // Substitute x_i = sum_j sub(i, j) y_j; sub has n_vars rows.
    MultiPoly substitute_linear(const Matrix& sub) const;
    // Substitute x_i = polys[i].
    MultiPoly compose(const std::vector<MultiPoly>& polys) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned k) const;

    bool operator==(const MultiPoly& o) const {
        return n_vars_ == o.n_vars_ && terms_ == o.terms_;
    }

    // Integer coefficients with content 1 and positive leading (glex) term.
    MultiPoly primitive() const;

    // "3*x*y - 4*x*z + y*z".  Default names: x,y,z for three variables,
    // otherwise x0, x1, ...
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t n_vars_;
    Terms terms_;
};

// Basis of degree-D forms annihilated by every row of `constraints` (rows
// indexed by monomials_glex(n_vars, D)).  The basis is the reduced echelon
// kernel, so it is deterministic.
std::vector<MultiPoly> fit_vanishing(std::size_t n_vars, unsigned degree,
                                     const Matrix& constraints);

struct Sample {
    Vector point;  // affine coordinates x1..x_{n-1} on the chart x0 = 1
    Rational value;
};

// The unique polynomial of degree <= D in n_vars-1 affine variables through
// the samples, homogenized to degree D in n_vars variables.  Throws
// DomainError("inconsistent") or DomainError("underdetermined").
MultiPoly interpolate_dense(std::size_t n_vars, unsigned degree,
                            const std::vector<Sample>& samples);

// Binary form sum_k c_k s^{d-k} t^k.
struct BinaryForm {
    std::vector<Rational> coeffs;

    BinaryForm() = default;
    explicit BinaryForm(std::vector<Rational> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const;
    Rational evaluate(const Rational& s, const Rational& t) const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm scaled(const Rational& c) const;
    BinaryForm pow(unsigned k) const;
    bool operator==(const BinaryForm& o) const = default;

    // (b s - a t), the linear form vanishing at (a:b).
    static BinaryForm vanishing_at(const Rational& a, const Rational& b);
};

// Sylvester determinant of two forms of positive degree.  Zero iff they share
// a projective root.  Throws DomainError("zero_form") on zero input.
Rational binary_resultant(const BinaryForm& f, const BinaryForm& g);

// f / g when g divides f exactly (g nonzero), otherwise nullopt.
std::optional<BinaryForm> binary_quotient(const BinaryForm& f, const BinaryForm& g);

// Order of vanishing of f at the parameter (a:b).  f must be nonzero.
unsigned binary_root_multiplicity(const BinaryForm& f, const Rational& a, const Rational& b);

}  // namespace logbundle
