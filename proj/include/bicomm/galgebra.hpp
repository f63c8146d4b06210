#pragma once

#include "bicomm/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bicomm {

// Thrown when externally supplied data (JSON elements, CLI payloads) violates
// a structural invariant; the CLI maps it to its own exit code.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

// Element of the degree-d polynomial model of the free algebra: a linear part
// (coefficients of the generators x_1..x_d) plus a "product part", a
// polynomial in y/z in which every monomial carries at least one y and one z.
//
// The product rules are:
//   x_i * x_j = y_i z_j,   x_i * u = y_i * u,   u * x_i = u * z_i,
//   u * v = uv (ordinary commutative product)
// for product-part elements u, v.  Multiplication never produces a linear
// part, which is what makes the two one-sided identities above consistent.
struct GElement {
    int d;
    std::vector<Rational> linear;
    Poly square;

    explicit GElement(int dim_) : d(dim_), linear(dim_, Rational(0)), square(dim_) {}

    static GElement variable(int i, int dim_);
    // Wraps a product-part polynomial; rejects monomials without both a y and
    // a z factor.
    static GElement from_square(Poly p);

    bool is_zero() const;
    bool linear_is_zero() const;
    void validate() const;

    // Combined per-variable degrees when the element is multihomogeneous
    // (every monomial, and every linear generator present, carries the same
    // degree vector).
    bool is_multihomogeneous(std::vector<int>* degvec = nullptr) const;
    int total_degree() const; // requires homogeneity; throws otherwise

    GElement& operator+=(const GElement& o);
    GElement& operator-=(const GElement& o);
    GElement operator-() const;
    GElement& operator*=(const Rational& c);

    friend GElement operator+(GElement a, const GElement& b) { return a += b; }
    friend GElement operator-(GElement a, const GElement& b) { return a -= b; }
    friend GElement operator*(GElement a, const Rational& c) { return a *= c; }
    friend GElement operator*(const Rational& c, GElement a) { return a *= c; }
    friend bool operator==(const GElement& a, const GElement& b) {
        return a.d == b.d && a.linear == b.linear && a.square == b.square;
    }
    friend bool operator!=(const GElement& a, const GElement& b) { return !(a == b); }

    std::string str() const;
};

GElement gmul(const GElement& a, const GElement& b);

// Derivation sending x_i -> x_j (and so y_i -> y_j, z_i -> z_j) and killing
// every other generator; extended by the Leibniz rule.
GElement delta_ij(const GElement& a, int i, int j);

// Derivation sending x_i (and y_i, z_i) to the product-part polynomial u and
// killing every other generator.
GElement delta_i_u(const GElement& a, int i, const Poly& u);

// Endomorphism substituting x_i -> x_j * x_k and fixing other generators.
GElement substitute_product(const GElement& a, int i, int j, int k);

// Endomorphism substituting x_i -> x_i + x_j (j distinct from i).
GElement polarize(const GElement& a, int i, int j);

// Full linearization of a multihomogeneous element: each variable of degree k
// is split across k fresh variables, assigned consecutively in increasing
// original-variable order, and the multilinear component is extracted.  The
// result lives in dimension n = total degree.  No factorial normalization is
// applied, so substituting the original variable back in for its block
// recovers (prod_i k_i!) times the input.
GElement multilinearize(const GElement& a);

// Image of the element in the one-dimensional algebra spanned by an
// idempotent: every generator and every monomial evaluates to 1, so the
// result is the sum of all coefficients.  Nonzero means the element cannot
// vanish identically on that algebra.
Rational witness_eval(const GElement& a);

// Substitution value for one slot of a multilinear element: either a
// generator of the target model or a product-part polynomial.
struct Target {
    bool is_var = true;
    int var = 0;
    Poly square_part;

    Target() : square_part(0) {}
    static Target variable(int idx);
    static Target square(Poly p);
    // Degree vector contributed by this target in the output dimension.
    std::vector<int> multidegree(int dout) const;
};

// Evaluates a multilinear element at one target per slot.  The element must
// be multilinear (degree vector all ones, or a single generator); targets
// live in the model of dimension dout.
GElement eval_multilinear(const GElement& ml, const std::vector<Target>& targets, int dout);

} // namespace bicomm
