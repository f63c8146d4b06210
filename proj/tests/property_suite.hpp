#pragma once

// Randomized invariant suite shared by the property-test binary and the
// acceptance gate.  Each function runs `runs` independently sampled instances
// and reports how many violated the invariant, keeping the first failure as a
// human-readable witness.

#include "bicomm/galgebra.hpp"
#include "bicomm/hwv.hpp"
#include "bicomm/rng.hpp"
#include "bicomm/tideal.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace bicomm::props {

struct SuiteResult {
    int runs = 0;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& witness) {
        ++failures;
        if (first_failure.empty()) first_failure = witness;
    }
};

// Random polynomial whose monomials all carry at least one y and one z
// factor, so it can serve as the product part of an element.  May come out
// zero when every coefficient draw hits 0.
inline Poly random_square_poly(Rng& rng, int d, int max_degree, int terms) {
    Poly p(d);
    for (int t = 0; t < terms; ++t) {
        int deg = rng.range(2, max_degree);
        int yd = rng.range(1, deg - 1);
        std::vector<int> ye(d, 0), ze(d, 0);
        for (int k = 0; k < yd; ++k) ye[rng.range(0, d - 1)]++;
        for (int k = 0; k < deg - yd; ++k) ze[rng.range(0, d - 1)]++;
        p.add_term(Monomial(ye, ze), Rational(rng.range(-3, 3)));
    }
    return p;
}

inline GElement random_element(Rng& rng, int d, int max_degree) {
    GElement e(d);
    if (rng.range(0, 2) == 0)
        for (int i = 0; i < d; ++i)
            if (rng.range(0, 1)) e.linear[i] = Rational(rng.range(-2, 2));
    e.square = random_square_poly(rng, d, max_degree, rng.range(1, 3));
    return e;
}

// Nonzero random combination of the highest-weight basis of one shape.
inline Poly random_hwv(Rng& rng, const Partition& lambda) {
    std::vector<Poly> basis = hwv_basis(lambda);
    Poly f(2);
    while (f.is_zero())
        for (const Poly& w : basis) f += w * Rational(rng.range(-2, 2));
    return f;
}

inline Partition random_two_row(Rng& rng, int min_n, int max_n) {
    int n = rng.range(min_n, max_n);
    int l2 = rng.range(0, n / 2);
    return Partition(n - l2, l2);
}

// Random multihomogeneous element of the (a, b) component of the
// two-variable model; retries until nonzero.
inline Poly random_component_poly(Rng& rng, int a, int b) {
    Poly p(2);
    while (p.is_zero())
        for (int y1 = 0; y1 <= a; ++y1)
            for (int y2 = 0; y2 <= b; ++y2) {
                Monomial m({y1, y2}, {a - y1, b - y2});
                if (m.is_product_monomial()) p.add_term(m, Rational(rng.range(-2, 2)));
            }
    return p;
}

// Both defining identities hold for every triple of elements of the model:
// (ab)c = (ac)b and a(bc) = b(ac).
inline SuiteResult prop_bicommutativity(int runs, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    for (int k = 0; k < runs; ++k) {
        ++r.runs;
        int d = rng.range(2, 3);
        GElement a = random_element(rng, d, 3);
        GElement b = random_element(rng, d, 3);
        GElement c = random_element(rng, d, 3);
        GElement right = gmul(gmul(a, b), c) - gmul(gmul(a, c), b);
        GElement left = gmul(a, gmul(b, c)) - gmul(b, gmul(a, c));
        if (!right.is_zero() || !left.is_zero()) {
            std::ostringstream os;
            os << "instance " << k << ": a=" << a.str() << " b=" << b.str() << " c=" << c.str();
            r.fail(os.str());
        }
    }
    return r;
}

// derive() is a derivation: it satisfies the Leibniz rule on products.
inline SuiteResult prop_leibniz(int runs, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    for (int k = 0; k < runs; ++k) {
        ++r.runs;
        Poly p = random_square_poly(rng, 2, 3, 2);
        Poly q = random_square_poly(rng, 2, 3, 2);
        int i = rng.range(0, 1);
        Poly yimg = random_square_poly(rng, 2, 2, 1);
        Poly zimg = random_square_poly(rng, 2, 2, 1);
        Poly lhs = derive(p * q, i, yimg, zimg);
        Poly rhs = derive(p, i, yimg, zimg) * q + p * derive(q, i, yimg, zimg);
        if (lhs != rhs) {
            std::ostringstream os;
            os << "instance " << k << ": p=" << p.str() << " q=" << q.str() << " i=" << i;
            r.fail(os.str());
        }
    }
    return r;
}

// Highest-weight vectors are exactly the kernel of the raising derivation:
// random combinations of the declared basis are killed, and the kernel of
// the raising map on the full multihomogeneous component has exactly the
// predicted dimension.
inline SuiteResult prop_hwv_kernel(int runs, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    auto raising = [](const Poly& p) {
        return derive(p, 1, Poly::var_y(0, 2), Poly::var_z(0, 2));
    };
    for (int k = 0; k < runs; ++k) {
        ++r.runs;
        Partition lam = random_two_row(rng, 2, 6);
        std::vector<Poly> basis = hwv_basis(lam);
        bool ok = static_cast<int>(basis.size()) == free_multiplicity(lam);
        Poly combo(2);
        for (const Poly& w : basis) combo += w * Rational(rng.range(-2, 2));
        ok = ok && raising(combo).is_zero() && (combo.is_zero() || is_hwv(combo));
        std::vector<Poly> images;
        for (int y1 = 0; y1 <= lam.l1; ++y1)
            for (int y2 = 0; y2 <= lam.l2; ++y2) {
                Monomial m({y1, y2}, {lam.l1 - y1, lam.l2 - y2});
                if (m.is_product_monomial())
                    images.push_back(raising(Poly::term(m, Rational(1))));
            }
        ok = ok && static_cast<int>(kernel_combinations(images).size()) == free_multiplicity(lam);
        if (!ok) {
            std::ostringstream os;
            os << "instance " << k << ": shape " << lam.str();
            r.fail(os.str());
        }
    }
    return r;
}

// Adding generators can only shrink cocharacter multiplicities, which always
// stay between 0 and the free value.
inline SuiteResult prop_monotonicity(int runs, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    for (int k = 0; k < runs; ++k) {
        ++r.runs;
        Partition sf = random_two_row(rng, 2, 4);
        Partition sg = random_two_row(rng, 2, 4);
        Poly f = random_component_poly(rng, sf.l1, sf.l2);
        Poly g = random_component_poly(rng, sg.l1, sg.l2);
        VarietySpec base("base", {GElement::from_square(f)});
        VarietySpec ext("ext", {GElement::from_square(f), GElement::from_square(g)});
        Partition target = random_two_row(rng, 2, 5);
        int mb = multiplicity(base, target);
        int me = multiplicity(ext, target);
        if (!(0 <= me && me <= mb && mb <= free_multiplicity(target))) {
            std::ostringstream os;
            os << "instance " << k << ": f=" << f.str() << " g=" << g.str() << " target "
               << target.str() << " gave " << mb << " -> " << me;
            r.fail(os.str());
        }
    }
    return r;
}

// A nonzero highest-weight vector of shape lambda forces every shape mu with
// mu2 >= lambda1 to vanish from the cocharacter of the variety it defines.
inline SuiteResult prop_vanishing(int runs, std::uint64_t seed, int max_target_degree = 6) {
    SuiteResult r;
    Rng rng(seed);
    for (int k = 0; k < runs; ++k) {
        ++r.runs;
        Partition lam = random_two_row(rng, 2, 5);
        Poly f = random_hwv(rng, lam);
        VarietySpec spec("one", {GElement::from_square(f)});
        for (int mu2 = lam.l1; 2 * mu2 <= max_target_degree; ++mu2)
            for (int mu1 = mu2; mu1 + mu2 <= max_target_degree; ++mu1) {
                if (mu1 + mu2 < lam.n()) continue;
                Partition mu(mu1, mu2);
                int m = multiplicity(spec, mu);
                if (m != 0) {
                    std::ostringstream os;
                    os << "instance " << k << ": f=" << f.str() << " of shape " << lam.str()
                       << " left multiplicity " << m << " at " << mu.str();
                    r.fail(os.str());
                }
            }
    }
    return r;
}

} // namespace bicomm::props
