#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bicomm/hwv.hpp"
#include "bicomm/rng.hpp"

#include <stdexcept>
#include <vector>

using namespace bicomm;

namespace {

Poly raising(const Poly& p) { return derive(p, 1, Poly::var_y(0, 2), Poly::var_z(0, 2)); }

// All product-type monomials of the two-variable model with combined variable
// degrees (a, b).
std::vector<Monomial> component_monomials(int a, int b) {
    std::vector<Monomial> out;
    for (int y1 = 0; y1 <= a; ++y1)
        for (int y2 = 0; y2 <= b; ++y2) {
            Monomial m({y1, y2}, {a - y1, b - y2});
            if (m.is_product_monomial()) out.push_back(m);
        }
    return out;
}

} // namespace

TEST_CASE("partitions parse, render, and order") {
    CHECK(Partition::parse("4") == Partition(4));
    CHECK(Partition::parse("3,1") == Partition(3, 1));
    CHECK(Partition::parse("4,0") == Partition(4));
    CHECK(Partition(4).str() == "(4)");
    CHECK(Partition(3, 1).str() == "(3,1)");
    CHECK(Partition(2, 2).n() == 4);
    CHECK(Partition(3).one_row());
    CHECK_FALSE(Partition(3, 1).one_row());

    CHECK_THROWS_AS(Partition(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition(0), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,1,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-2"), std::invalid_argument);

    CHECK(Partition(3) < Partition(3, 1)); // degree first
    CHECK(Partition(4) < Partition(3, 1)); // then second row
    CHECK(two_row_partitions(4) ==
          std::vector<Partition>{Partition(4), Partition(3, 1), Partition(2, 2)});
    CHECK(two_row_partitions(1) == std::vector<Partition>{Partition(1)});
    CHECK(two_row_partitions(5).size() == 3);
}

TEST_CASE("module dimensions follow the hook-length values") {
    CHECK(sn_irrep_dim(Partition(1)) == 1);
    CHECK(sn_irrep_dim(Partition(6)) == 1);
    CHECK(sn_irrep_dim(Partition(4, 1)) == 4);
    CHECK(sn_irrep_dim(Partition(2, 1)) == 2);
    CHECK(sn_irrep_dim(Partition(2, 2)) == 2);
    CHECK(sn_irrep_dim(Partition(3, 2)) == 5);
    CHECK(sn_irrep_dim(Partition(3, 3)) == 5);
    CHECK(sn_irrep_dim(Partition(4, 2)) == 9);
    CHECK(sn_irrep_dim(Partition(5, 2)) == 14);
}

TEST_CASE("declared multiplicities for the identity-free model") {
    CHECK(free_multiplicity(Partition(1)) == 1);
    CHECK(free_multiplicity(Partition(2)) == 1);
    CHECK(free_multiplicity(Partition(5)) == 4);
    CHECK(free_multiplicity(Partition(3, 1)) == 3);
    CHECK(free_multiplicity(Partition(2, 2)) == 1);
    CHECK(free_multiplicity(Partition(4, 2)) == 3);
}

TEST_CASE("basis vectors are independent highest-weight vectors of the right weight") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& lam : two_row_partitions(n)) {
            std::vector<Poly> basis = hwv_basis(lam);
            CHECK(static_cast<int>(basis.size()) == free_multiplicity(lam));
            for (const Poly& w : basis) {
                CHECK(is_hwv(w));
                std::vector<int> deg;
                REQUIRE(w.is_multihomogeneous(&deg));
                CHECK(deg == std::vector<int>{lam.l1, lam.l2});
            }
            CHECK(rank_of_span(basis) == static_cast<int>(basis.size()));
        }
    CHECK_THROWS_AS(hwv_basis(Partition(1)), std::invalid_argument);
}

TEST_CASE("the basis spans exactly the kernel of the raising derivation") {
    // Independent route: inside the full (l1, l2) component, the solutions of
    // raising(p) == 0 are found by exact linear algebra and must coincide
    // with the span of the declared basis, in number and in content.
    for (int n = 2; n <= 6; ++n)
        for (const Partition& lam : two_row_partitions(n)) {
            std::vector<Monomial> monos = component_monomials(lam.l1, lam.l2);
            std::vector<Poly> images;
            for (const Monomial& m : monos)
                images.push_back(raising(Poly::term(m, Rational(1))));
            auto kernel = kernel_combinations(images);
            CHECK(static_cast<int>(kernel.size()) == free_multiplicity(lam));

            RowSpan span(2);
            for (const Poly& w : hwv_basis(lam)) span.insert(w);
            REQUIRE(span.rank() == free_multiplicity(lam));
            for (const auto& combo : kernel) {
                Poly p(2);
                for (std::size_t i = 0; i < monos.size(); ++i)
                    p += Poly::term(monos[i], combo[i]);
                CHECK(span.contains(p));
            }
        }
}

TEST_CASE("specific basis vectors have the published closed form") {
    int d = 2;
    Poly y1 = Poly::var_y(0, d), z1 = Poly::var_z(0, d);
    Poly y2 = Poly::var_y(1, d), z2 = Poly::var_z(1, d);
    Poly det = y1 * z2 - y2 * z1;

    std::vector<Poly> one_row = hwv_basis(Partition(3));
    REQUIRE(one_row.size() == 2);
    CHECK(one_row[0] == y1 * z1 * z1);
    CHECK(one_row[1] == y1 * y1 * z1);

    std::vector<Poly> hook = hwv_basis(Partition(2, 1));
    REQUIRE(hook.size() == 2);
    CHECK(hook[0] == det * z1);
    CHECK(hook[1] == y1 * det);

    std::vector<Poly> square = hwv_basis(Partition(2, 2));
    REQUIRE(square.size() == 1);
    CHECK(square[0] == det * det);
}

TEST_CASE("raising kills no monomial that mixes the variables") {
    CHECK_FALSE(is_hwv(Poly::var_y(0, 2) * Poly::var_z(1, 2))); // y1*z2
    CHECK(is_hwv(Poly::var_y(0, 2) * Poly::var_z(0, 2)));       // y1*z1
    CHECK(is_hwv(Poly::zero(2)));
    GElement e(2);
    e.linear[0] = Rational(1);
    CHECK(is_hwv(e)); // the first generator is a weight vector of shape (1)
    e.linear[1] = Rational(1);
    CHECK_FALSE(is_hwv(e)); // x1 + x2 is moved by the raising derivation
}

TEST_CASE("subspace extraction finds the highest-weight part of a span") {
    Partition lam(2, 1);
    std::vector<Poly> basis = hwv_basis(lam);

    // the full component contains exactly the two basis lines
    std::vector<Poly> component;
    for (const Monomial& m : component_monomials(2, 1))
        component.push_back(Poly::term(m, Rational(1)));
    std::vector<Poly> found = hwv_subspace(component, lam);
    REQUIRE(found.size() == 2);
    RowSpan span(2);
    for (const Poly& w : basis) span.insert(w);
    for (const Poly& w : found) {
        CHECK(is_hwv(w));
        CHECK(span.contains(w));
    }

    // a one-dimensional input yields its own line back
    std::vector<Poly> single = hwv_subspace({basis[0] + basis[1]}, lam);
    REQUIRE(single.size() == 1);
    CHECK(coordinates(single[0], {basis[0] + basis[1]}).has_value());
}

TEST_CASE("coordinates in the basis are exact and reject outsiders") {
    Partition lam(4);
    std::vector<Poly> basis = hwv_basis(lam);
    REQUIRE(basis.size() == 3);
    Poly p = Rational(3) * basis[0] - Rational(1, 2) * basis[2];
    auto c = hwv_coordinates(p, lam);
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<Rational>{Rational(3), Rational(0), Rational(-1, 2)});

    // a component member that is not a highest-weight vector has no coordinates
    Poly outsider = Poly::var_y(0, 2) * Poly::var_y(0, 2) * Poly::var_y(1, 2) * Poly::var_z(0, 2);
    CHECK_FALSE(hwv_coordinates(outsider, Partition(3, 1)).has_value());
}
