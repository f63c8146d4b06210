#include "bicomm/varieties.hpp"

#include <stdexcept>

namespace bicomm {

namespace {

// Generator of the one-variable family placed on variable `var` of a
// d-dimensional model: a1*y^2*z + a2*y*z^2.
GElement u_embedded(const Rational& a1, const Rational& a2, int var, int d) {
    Poly sq(d);
    Monomial m1(d);
    m1.yexp[var] = 2;
    m1.zexp[var] = 1;
    Monomial m2(d);
    m2.yexp[var] = 1;
    m2.zexp[var] = 2;
    sq.add_term(m1, a1);
    sq.add_term(m2, a2);
    return GElement::from_square(sq);
}

Poly pair_determinant(int i, int j, int d) {
    Monomial a(d), b(d);
    a.yexp[i] = 1;
    a.zexp[j] = 1;
    b.yexp[j] = 1;
    b.zexp[i] = 1;
    return Poly::term(a, Rational(1)) - Poly::term(b, Rational(1));
}

// Generator of the two-variable family in the d=2 model:
// (b1*y1 + b2*z1) * (y1*z2 - y2*z1).
GElement v_embedded(const Rational& b1, const Rational& b2) {
    Poly lin = b1 * Poly::var_y(0, 2) + b2 * Poly::var_z(0, 2);
    return GElement::from_square(lin * pair_determinant(0, 1, 2));
}

Poly mono2(int y0, int z0, int y1, int z1) {
    Monomial m(2);
    m.yexp[0] = y0;
    m.zexp[0] = z0;
    m.yexp[1] = y1;
    m.zexp[1] = z1;
    return Poly::term(m, Rational(1));
}

MultiplicityTable make_table(int n, const std::vector<std::pair<Partition, int>>& nonzero) {
    MultiplicityTable t;
    t.n = n;
    for (const auto& lambda : two_row_partitions(n)) {
        int m = 0;
        for (const auto& [p, v] : nonzero)
            if (p == lambda) m = v;
        t.rows.emplace_back(lambda, m);
    }
    return t;
}

} // namespace

std::string case_name(AlphaCase c) {
    switch (c) {
        case AlphaCase::Generic: return "generic";
        case AlphaCase::Alpha2Zero: return "a2-zero";
        case AlphaCase::Alpha1Zero: return "a1-zero";
        case AlphaCase::SumZero: return "sum-zero";
        case AlphaCase::DiffZero: return "diff-zero";
    }
    return "?";
}

std::string case_name(BetaCase c) {
    switch (c) {
        case BetaCase::Generic: return "generic";
        case BetaCase::Beta2Zero: return "b2-zero";
        case BetaCase::Beta1Zero: return "b1-zero";
        case BetaCase::SumZero: return "sum-zero";
        case BetaCase::DiffZero: return "diff-zero";
    }
    return "?";
}

std::vector<AlphaCase> all_alpha_cases() {
    return {AlphaCase::Generic, AlphaCase::Alpha2Zero, AlphaCase::Alpha1Zero,
            AlphaCase::SumZero, AlphaCase::DiffZero};
}

std::vector<BetaCase> all_beta_cases() {
    return {BetaCase::Generic, BetaCase::Beta2Zero, BetaCase::Beta1Zero,
            BetaCase::SumZero, BetaCase::DiffZero};
}

AlphaCase classify_alpha(const Rational& a1, const Rational& a2) {
    if (a1.is_zero() && a2.is_zero())
        throw std::invalid_argument("classify_alpha: parameter pair must be nonzero");
    if (a2.is_zero()) return AlphaCase::Alpha2Zero;
    if (a1.is_zero()) return AlphaCase::Alpha1Zero;
    if ((a1 + a2).is_zero()) return AlphaCase::SumZero;
    if ((a1 - a2).is_zero()) return AlphaCase::DiffZero;
    return AlphaCase::Generic;
}

BetaCase classify_beta(const Rational& b1, const Rational& b2) {
    if (b1.is_zero() && b2.is_zero())
        throw std::invalid_argument("classify_beta: parameter pair must be nonzero");
    if (b2.is_zero()) return BetaCase::Beta2Zero;
    if (b1.is_zero()) return BetaCase::Beta1Zero;
    if ((b1 + b2).is_zero()) return BetaCase::SumZero;
    if ((b1 - b2).is_zero()) return BetaCase::DiffZero;
    return BetaCase::Generic;
}

std::pair<Rational, Rational> alpha_representative(AlphaCase c) {
    switch (c) {
        case AlphaCase::Generic: return {Rational(1), Rational(2)};
        case AlphaCase::Alpha2Zero: return {Rational(1), Rational(0)};
        case AlphaCase::Alpha1Zero: return {Rational(0), Rational(1)};
        case AlphaCase::SumZero: return {Rational(1), Rational(-1)};
        case AlphaCase::DiffZero: return {Rational(1), Rational(1)};
    }
    throw std::logic_error("alpha_representative: bad case");
}

std::pair<Rational, Rational> beta_representative(BetaCase c) {
    switch (c) {
        case BetaCase::Generic: return {Rational(1), Rational(2)};
        case BetaCase::Beta2Zero: return {Rational(1), Rational(0)};
        case BetaCase::Beta1Zero: return {Rational(0), Rational(1)};
        case BetaCase::SumZero: return {Rational(1), Rational(-1)};
        case BetaCase::DiffZero: return {Rational(1), Rational(1)};
    }
    throw std::logic_error("beta_representative: bad case");
}

std::pair<Rational, Rational> sample_alpha(AlphaCase c, Rng& rng) {
    switch (c) {
        case AlphaCase::Generic: {
            for (;;) {
                Rational a1 = rng.nonzero_rational();
                Rational a2 = rng.nonzero_rational();
                if (classify_alpha(a1, a2) == AlphaCase::Generic) return {a1, a2};
            }
        }
        case AlphaCase::Alpha2Zero: return {rng.nonzero_rational(), Rational(0)};
        case AlphaCase::Alpha1Zero: return {Rational(0), rng.nonzero_rational()};
        case AlphaCase::SumZero: {
            Rational r = rng.nonzero_rational();
            return {r, -r};
        }
        case AlphaCase::DiffZero: {
            Rational r = rng.nonzero_rational();
            return {r, r};
        }
    }
    throw std::logic_error("sample_alpha: bad case");
}

std::pair<Rational, Rational> sample_beta(BetaCase c, Rng& rng) {
    switch (c) {
        case BetaCase::Generic: {
            for (;;) {
                Rational b1 = rng.nonzero_rational();
                Rational b2 = rng.nonzero_rational();
                if (classify_beta(b1, b2) == BetaCase::Generic) return {b1, b2};
            }
        }
        case BetaCase::Beta2Zero: return {rng.nonzero_rational(), Rational(0)};
        case BetaCase::Beta1Zero: return {Rational(0), rng.nonzero_rational()};
        case BetaCase::SumZero: {
            Rational r = rng.nonzero_rational();
            return {r, -r};
        }
        case BetaCase::DiffZero: {
            Rational r = rng.nonzero_rational();
            return {r, r};
        }
    }
    throw std::logic_error("sample_beta: bad case");
}

VarietySpec free_spec() {
    VarietySpec s;
    s.label = "B";
    return s;
}

VarietySpec make_u(const Rational& a1, const Rational& a2) {
    classify_alpha(a1, a2); // validates the pair
    VarietySpec s;
    s.label = "U(" + a1.str() + "," + a2.str() + ")";
    s.generators.push_back(u_embedded(a1, a2, 0, 1));
    s.family = "u";
    s.p1 = a1;
    s.p2 = a2;
    return s;
}

VarietySpec make_v(const Rational& b1, const Rational& b2) {
    classify_beta(b1, b2);
    VarietySpec s;
    s.label = "V(" + b1.str() + "," + b2.str() + ")";
    s.generators.push_back(v_embedded(b1, b2));
    s.family = "v";
    s.p1 = b1;
    s.p2 = b2;
    return s;
}

VarietySpec variety_meet(const VarietySpec& a, const VarietySpec& b) {
    VarietySpec s;
    s.label = a.label + " & " + b.label;
    s.generators = a.generators;
    s.generators.insert(s.generators.end(), b.generators.begin(), b.generators.end());
    return s;
}

MultiplicityTable expected_cocharacter_free(int n) {
    MultiplicityTable t;
    t.n = n;
    for (const auto& lambda : two_row_partitions(n))
        t.rows.emplace_back(lambda, free_multiplicity(lambda));
    return t;
}

MultiplicityTable expected_cocharacter_u(AlphaCase c, int n) {
    if (n < 1) throw std::invalid_argument("expected_cocharacter_u: n must be positive");
    if (n <= 2) return expected_cocharacter_free(n);
    if (n == 3) return make_table(3, {{Partition(3), 1}, {Partition(2, 1), 2}});
    switch (c) {
        case AlphaCase::Generic:
            return make_table(n, {});
        case AlphaCase::Alpha2Zero:
        case AlphaCase::Alpha1Zero:
            return make_table(n, {{Partition(n), 1}, {Partition(n - 1, 1), 1}});
        case AlphaCase::SumZero:
            if (n == 4) return make_table(4, {{Partition(4), 1}, {Partition(2, 2), 1}});
            return make_table(n, {{Partition(n), 1}});
        case AlphaCase::DiffZero:
            if (n == 4) return make_table(4, {{Partition(3, 1), 1}});
            return make_table(n, {});
    }
    throw std::logic_error("expected_cocharacter_u: bad case");
}

MultiplicityTable expected_cocharacter_v(BetaCase c, int n) {
    if (n < 1) throw std::invalid_argument("expected_cocharacter_v: n must be positive");
    if (n <= 2) return expected_cocharacter_free(n);
    if (n == 3) return make_table(3, {{Partition(3), 2}, {Partition(2, 1), 1}});
    switch (c) {
        case BetaCase::Generic:
        case BetaCase::DiffZero:
            if (n == 4) return make_table(4, {{Partition(4), 2}});
            return make_table(n, {{Partition(n), 1}});
        case BetaCase::Beta2Zero:
        case BetaCase::Beta1Zero:
        case BetaCase::SumZero:
            return make_table(n, {{Partition(n), 2}, {Partition(n - 1, 1), 1}});
    }
    throw std::logic_error("expected_cocharacter_v: bad case");
}

// --- named consequence constructions ---------------------------------------

namespace {

GElement x0() { return GElement::variable(0, 2); }
GElement x1() { return GElement::variable(1, 2); }

GElement u_gen2(const Rational& a1, const Rational& a2) { return u_embedded(a1, a2, 0, 2); }

} // namespace

const std::vector<LemmaEntry>& lemma_consequence_table_u() {
    static const std::vector<LemmaEntry> table = {
        {"v1:(4)", Partition(4),
         [](const Rational& a1, const Rational& a2) { return gmul(u_gen2(a1, a2), x0()); },
         [](const Rational& a1, const Rational& a2) {
             return std::vector<Rational>{a2, a1, Rational(0)};
         }},
        {"v2:(4)", Partition(4),
         [](const Rational& a1, const Rational& a2) { return gmul(x0(), u_gen2(a1, a2)); },
         [](const Rational& a1, const Rational& a2) {
             return std::vector<Rational>{Rational(0), a2, a1};
         }},
        {"v3:(4)", Partition(4),
         [](const Rational& a1, const Rational& a2) {
             return delta_i_u(u_gen2(a1, a2), 0, mono2(1, 1, 0, 0));
         },
         [](const Rational& a1, const Rational& a2) {
             return std::vector<Rational>{a2, Rational(2) * (a1 + a2), a1};
         }},
        {"v1:(3,1)", Partition(3, 1),
         [](const Rational& a1, const Rational& a2) {
             GElement w = u_gen2(a1, a2);
             return gmul(delta_ij(w, 0, 1), x0()) - Rational(3) * gmul(w, x1());
         },
         [](const Rational& a1, const Rational& a2) {
             return std::vector<Rational>{-a2, Rational(-2) * a1, Rational(0)};
         }},
        {"v2:(3,1)", Partition(3, 1),
         [](const Rational& a1, const Rational& a2) {
             GElement w = u_gen2(a1, a2);
             return gmul(x0(), delta_ij(w, 0, 1)) - Rational(3) * gmul(x1(), w);
         },
         [](const Rational& a1, const Rational& a2) {
             return std::vector<Rational>{Rational(0), Rational(2) * a2, a1};
         }},
        {"v3:(3,1)", Partition(3, 1),
         [](const Rational& a1, const Rational& a2) {
             GElement w = u_gen2(a1, a2);
             GElement lin = multilinearize(w);
             std::vector<Target> t{Target::variable(0), Target::variable(1),
                                   Target::square(mono2(1, 1, 0, 0))};
             return delta_i_u(w, 0, mono2(1, 0, 0, 1) + mono2(0, 1, 1, 0)) -
                    eval_multilinear(lin, t, 2);
         },
         [](const Rational& a1, const Rational& a2) {
             return std::vector<Rational>{-a2, Rational(0), a1};
         }},
        {"v4:(3,1)", Partition(3, 1),
         [](const Rational& a1, const Rational& a2) {
             return delta_i_u(u_gen2(a1, a2), 0, mono2(1, 0, 0, 1) - mono2(0, 1, 1, 0));
         },
         [](const Rational& a1, const Rational& a2) {
             return std::vector<Rational>{a2, Rational(2) * (a1 + a2), a1};
         }},
        {"v1:(2,2)", Partition(2, 2),
         [](const Rational& a1, const Rational& a2) {
             GElement w1 = u_embedded(a1, a2, 0, 2);
             GElement w2 = u_embedded(a1, a2, 1, 2);
             GElement lin = multilinearize(w1);
             std::vector<Target> t{Target::variable(0), Target::variable(1),
                                   Target::square(mono2(1, 0, 0, 1) + mono2(0, 1, 1, 0))};
             return delta_i_u(w1, 0, mono2(0, 0, 1, 1)) + delta_i_u(w2, 1, mono2(1, 1, 0, 0)) -
                    Rational(1, 2) * eval_multilinear(lin, t, 2);
         },
         [](const Rational& a1, const Rational& a2) {
             return std::vector<Rational>{-(a1 + a2)};
         }},
    };
    return table;
}

const std::vector<LemmaEntry>& lemma_consequence_table_v() {
    static const std::vector<LemmaEntry> table = {
        {"t1:(3,1)", Partition(3, 1),
         [](const Rational& b1, const Rational& b2) { return gmul(v_embedded(b1, b2), x0()); },
         [](const Rational& b1, const Rational& b2) {
             return std::vector<Rational>{b2, b1, Rational(0)};
         }},
        {"t2:(3,1)", Partition(3, 1),
         [](const Rational& b1, const Rational& b2) { return gmul(x0(), v_embedded(b1, b2)); },
         [](const Rational& b1, const Rational& b2) {
             return std::vector<Rational>{Rational(0), b2, b1};
         }},
        {"t3:(3,1)", Partition(3, 1),
         [](const Rational& b1, const Rational& b2) {
             GElement p = multilinearize(v_embedded(b1, b2));
             std::vector<Target> both{Target::variable(0), Target::variable(0),
                                      Target::square(mono2(1, 0, 0, 1) + mono2(0, 1, 1, 0))};
             std::vector<Target> sq{Target::variable(0), Target::variable(1),
                                    Target::square(mono2(1, 1, 0, 0))};
             return Rational(1, 2) * eval_multilinear(p, both, 2) - eval_multilinear(p, sq, 2);
         },
         [](const Rational& b1, const Rational& b2) {
             return std::vector<Rational>{b2, Rational(0), b1};
         }},
        {"t4:(3,1)", Partition(3, 1),
         [](const Rational& b1, const Rational& b2) {
             GElement p = multilinearize(v_embedded(b1, b2));
             // Symmetrize the two slots of the doubled variable across the
             // third slot to isolate the component where the parameter factor
             // sits on the fresh variable.
             std::vector<Target> id{Target::variable(0), Target::variable(1), Target::variable(2)};
             std::vector<Target> swapped{Target::variable(0), Target::variable(2),
                                         Target::variable(1)};
             GElement psym = Rational(1, 3) * (eval_multilinear(p, id, 3) +
                                               Rational(2) * eval_multilinear(p, swapped, 3));
             std::vector<Target> t{Target::variable(0), Target::variable(1),
                                   Target::square(mono2(1, 1, 0, 0))};
             return eval_multilinear(psym, t, 2);
         },
         [](const Rational& b1, const Rational& b2) {
             return std::vector<Rational>{Rational(0), b1 + b2, Rational(0)};
         }},
        {"t5:(3,1)", Partition(3, 1),
         [](const Rational& b1, const Rational& b2) {
             GElement p = multilinearize(v_embedded(b1, b2));
             std::vector<Target> t{Target::variable(0), Target::variable(0),
                                   Target::square(mono2(1, 0, 0, 1) - mono2(0, 1, 1, 0))};
             return Rational(1, 2) * eval_multilinear(p, t, 2);
         },
         [](const Rational& b1, const Rational& b2) {
             return std::vector<Rational>{-b2, -(b1 - b2), b1};
         }},
        {"t6:(4)", Partition(4),
         [](const Rational& b1, const Rational& b2) {
             return substitute_product(v_embedded(b1, b2), 1, 0, 0);
         },
         [](const Rational& b1, const Rational& b2) {
             return std::vector<Rational>{-b2, -(b1 - b2), b1};
         }},
    };
    return table;
}

} // namespace bicomm
