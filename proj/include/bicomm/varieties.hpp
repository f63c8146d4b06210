#pragma once

#include "bicomm/rng.hpp"
#include "bicomm/tideal.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bicomm {

// Parameter cases of the one-variable degree-3 family
// u(a1,a2) = a1*x(xx) + a2*(xx)x, for nonzero (a1, a2).  Exactly one of the
// four degenerations can hold for a nonzero pair.
enum class AlphaCase { Generic, Alpha2Zero, Alpha1Zero, SumZero, DiffZero };

// Parameter cases of the two-variable degree-3 family
// v(b1,b2) = b1*x[x,y] + b2*[x,y]x, for nonzero (b1, b2).
enum class BetaCase { Generic, Beta2Zero, Beta1Zero, SumZero, DiffZero };

std::string case_name(AlphaCase c);
std::string case_name(BetaCase c);
std::vector<AlphaCase> all_alpha_cases();
std::vector<BetaCase> all_beta_cases();

AlphaCase classify_alpha(const Rational& a1, const Rational& a2);
BetaCase classify_beta(const Rational& b1, const Rational& b2);

// Canonical representatives: Generic (1,2); second-zero (1,0); first-zero
// (0,1); SumZero (1,-1); DiffZero (1,1).
std::pair<Rational, Rational> alpha_representative(AlphaCase c);
std::pair<Rational, Rational> beta_representative(BetaCase c);

// Random parameter pair lying in the given case (deterministic in rng).
std::pair<Rational, Rational> sample_alpha(AlphaCase c, Rng& rng);
std::pair<Rational, Rational> sample_beta(BetaCase c, Rng& rng);

// The free object: no identities.
VarietySpec free_spec();

// u-family spec: one-variable generator a1*y1^2*z1 + a2*y1*z1^2 (the model
// image of a1*x(xx) + a2*(xx)x).
VarietySpec make_u(const Rational& a1, const Rational& a2);

// v-family spec: two-variable generator (b1*y1 + b2*z1)(y1*z2 - y2*z1)
// (the model image of b1*x[x,y] + b2*[x,y]x).
VarietySpec make_v(const Rational& b1, const Rational& b2);

// Variety satisfying both sets of identities (lattice meet): generator union.
VarietySpec variety_meet(const VarietySpec& a, const VarietySpec& b);

// Closed-form cocharacter multiplicity tables.
MultiplicityTable expected_cocharacter_free(int n);
MultiplicityTable expected_cocharacter_u(AlphaCase c, int n);
MultiplicityTable expected_cocharacter_v(BetaCase c, int n);

// A named consequence of a family generator: how to build it from the raw
// generator with element operations, and the expected coordinates in the hwv
// basis of its shape, both as functions of the family parameters.
struct LemmaEntry {
    std::string name;
    Partition shape;
    GElement (*build)(const Rational&, const Rational&);
    std::vector<Rational> (*coords)(const Rational&, const Rational&);
};

const std::vector<LemmaEntry>& lemma_consequence_table_u();
const std::vector<LemmaEntry>& lemma_consequence_table_v();

} // namespace bicomm
