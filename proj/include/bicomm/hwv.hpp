#pragma once

#include "bicomm/galgebra.hpp"
#include "bicomm/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bicomm {

// Two-row partition (l1, l2) with l1 >= l2 >= 0 and l1 >= 1.  These index the
// symmetric-group modules that can occur in the model: longer shapes never do.
struct Partition {
    int l1;
    int l2;

    explicit Partition(int a, int b = 0);

    int n() const { return l1 + l2; }
    bool one_row() const { return l2 == 0; }

    // Accepts "n" or "l1,l2" (weakly decreasing, positive first part).
    static Partition parse(const std::string& s);
    std::string str() const; // "(4)" or "(3,1)"

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.l1 == b.l1 && a.l2 == b.l2;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.n() != b.n()) return a.n() < b.n();
        return a.l2 < b.l2;
    }
};

// All two-row partitions of n, from (n) down to the most balanced shape.
std::vector<Partition> two_row_partitions(int n);

// Independent highest-weight vectors of shape lambda in the free model:
// 1 for (1); n-1 for (n) with n >= 2; l1-l2+1 when l2 >= 1.
int free_multiplicity(const Partition& lambda);

// Dimension of the irreducible two-row S_n module:
// f^(a,b) = n! * (a-b+1) / ((a+1)! * b!).
long long sn_irrep_dim(const Partition& lambda);

// Basis highest-weight vectors for shape lambda in the two-variable model,
// listed in increasing j (|lambda| >= 2; the degree-1 module is the span of
// x1 and is handled at the element level):
//   (n):      w^(j) = y1^j z1^(n-j),                        j = 1 .. n-1
//   (l1,l2):  w^(j) = y1^j (y1 z2 - y2 z1)^l2 z1^(l1-l2-j), j = 0 .. l1-l2
std::vector<Poly> hwv_basis(const Partition& lambda);

// True when every raising derivation (higher variable index to lower) kills p.
bool is_hwv(const Poly& p);
bool is_hwv(const GElement& a);

// Deterministic normalized basis of the highest-weight vectors of shape
// lambda inside span(ps); ps must live in the lambda-component of the
// two-variable model.
std::vector<Poly> hwv_subspace(const std::vector<Poly>& ps, const Partition& lambda);

// Coordinates of p in hwv_basis(lambda); nullopt when p is not in that span.
std::optional<std::vector<Rational>> hwv_coordinates(const Poly& p, const Partition& lambda);

} // namespace bicomm
