#pragma once

#include "bicomm/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bicomm {

// Monomial in the commuting variables y1..yd, z1..zd, stored as the two
// exponent vectors.  The pair (yexp, zexp) always has matching length d.
struct Monomial {
    std::vector<int> yexp;
    std::vector<int> zexp;

    explicit Monomial(int d) : yexp(d, 0), zexp(d, 0) {}
    Monomial(std::vector<int> y, std::vector<int> z);

    int dim() const { return static_cast<int>(yexp.size()); }
    int ydeg() const;
    int zdeg() const;
    int total_degree() const { return ydeg() + zdeg(); }
    // Combined degree of variable i across both families.
    int vardeg(int i) const { return yexp[i] + zexp[i]; }
    std::vector<int> multidegree() const;
    // Monomials representing genuine products carry at least one y and one z.
    bool is_product_monomial() const { return ydeg() >= 1 && zdeg() >= 1; }

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return yexp == o.yexp && zexp == o.zexp; }

    std::string str() const;
};

// Graded lexicographic order, larger-first: higher total degree wins, ties
// broken lexicographically on the concatenated (yexp, zexp) vector.  Poly
// iterates and renders in this order, which makes output canonical.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    explicit Poly(int d) : d_(d) {}

    static Poly zero(int d) { return Poly(d); }
    static Poly term(const Monomial& m, const Rational& c);
    static Poly var_y(int i, int d);
    static Poly var_z(int i, int d);

    int dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    // Largest monomial in the graded-lex order; throws on the zero polynomial.
    const Monomial& lead_monomial() const;
    const Rational& lead_coeff() const;

    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // True when every monomial has the same per-variable combined degree
    // vector; that vector is written to *degvec when supplied.  The zero
    // polynomial counts as multihomogeneous of any degree.
    bool is_multihomogeneous(std::vector<int>* degvec = nullptr) const;

    std::string str() const;

private:
    int d_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Terms of p whose combined per-variable degrees equal degvec exactly.
Poly multihomogeneous_component(const Poly& p, const std::vector<int>& degvec);

// Algebra homomorphism sending y_i to images[i].first and z_i to
// images[i].second.  images.size() must equal p.dim() and all image
// polynomials must share one dimension, which becomes the result's.
Poly substitute(const Poly& p, const std::vector<std::pair<Poly, Poly>>& images);

// Derivation determined by y_i -> yimg, z_i -> zimg (other variables fixed),
// extended to all of K[Y,Z] by the Leibniz rule.
Poly derive(const Poly& p, int i, const Poly& yimg, const Poly& zimg);

// Incrementally maintained reduced row-echelon basis for a span of
// polynomials, with unit leading coefficients.  Rows are kept mutually
// reduced and ordered by strictly decreasing leading monomial, so membership
// tests and rank queries are exact and deterministic.
class RowSpan {
public:
    explicit RowSpan(int d) : d_(d) {}

    // Returns true when p enlarges the span.
    bool insert(Poly p);
    bool contains(Poly p) const;
    // Remainder of p after reduction modulo the span.
    Poly reduce(Poly p) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return d_; }
    const std::vector<Poly>& rows() const { return rows_; }

private:
    int d_;
    std::vector<Poly> rows_;
};

int rank_of_span(const std::vector<Poly>& ps);

// Coordinates of p as a combination of `basis`.  The basis must be linearly
// independent (std::invalid_argument otherwise); returns nullopt when p lies
// outside the span.
std::optional<std::vector<Rational>> coordinates(const Poly& p,
                                                 const std::vector<Poly>& basis);

// Basis of { c : sum_i c_i * images[i] == 0 }, emitted in a deterministic
// order.  Used to cut kernels of linear maps out of spans.
std::vector<std::vector<Rational>> kernel_combinations(const std::vector<Poly>& images);

} // namespace bicomm
