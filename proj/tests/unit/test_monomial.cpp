#include <cmath>
#include <random>

#include "doctest.h"

#include "dyndeg/monomial.hpp"
#include "dyndeg/poly_text.hpp"

using namespace dyndeg;

namespace {

MonomialMap const fib({{2, 1}, {1, 1}});

QPoly P(char const* s) { return parse_poly(s, 3); }

}  // namespace

TEST_SUITE("monomial") {

TEST_CASE("degree formula") {
    CHECK(degree_D(identity_matrix(2)) == 1);
    CHECK(degree_D(fib) == 3);
    CHECK(degree_D(IntMatrix{{-1, 0}, {0, -1}}) == 2);
    CHECK_THROWS_AS(MonomialMap(IntMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("homogenization") {
    CHECK(homogenize(MonomialMap(identity_matrix(2))) == ProjectiveMap<Rational>::identity(2));
    auto const h = homogenize(fib);
    CHECK(h.coords()[0] == P("X^2*Y"));
    CHECK(h.coords()[1] == P("X*Y*Z"));
    CHECK(h.coords()[2] == P("Z^3"));
    auto const swap = homogenize(MonomialMap({{0, 1}, {1, 0}}));
    CHECK(swap.coords()[0] == P("Y"));
    CHECK(swap.coords()[1] == P("X"));
}

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly(fib.matrix()) == std::vector<Integer>{1, -3, 1});
    CHECK(char_poly(identity_matrix(2)) == std::vector<Integer>{1, -2, 1});
    CHECK(char_poly(IntMatrix{{0, 1}, {-1, 0}}) == std::vector<Integer>{1, 0, 1});
}

TEST_CASE("spectral radius") {
    auto const r = spectral_radius(fib, 1e-9);
    CHECK(r.value == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-9));
    CHECK(r.lower <= (3 + std::sqrt(5.0)) / 2);
    CHECK(spectral_radius(MonomialMap(identity_matrix(3)), 1e-9).value == doctest::Approx(1.0));
    CHECK(spectral_radius(MonomialMap({{0, 1}, {-1, 0}}), 1e-9).value == doctest::Approx(1.0));
    CHECK_THROWS(spectral_radius(fib, 0.1));
}

TEST_CASE("norm equivalence and contraction index") {
    CHECK(sup_norm(fib.matrix()) == 2);
    CHECK(verify_norm_equivalence(fib));
    CHECK(verify_norm_equivalence(MonomialMap(identity_matrix(2))));
    CHECK(verify_norm_equivalence(MonomialMap({{-1, 0}, {0, -1}})));
    CHECK(find_k_contraction(fib, 1e-9) == 0);
    CHECK(find_k_contraction(MonomialMap(identity_matrix(2)), 1e-9) == 0);
    CHECK(find_k_contraction(MonomialMap({{3, -2}, {1, 0}}), 1e-9) <= 1);
}

TEST_CASE("degree growth bound") {
    auto const c = conjecture4_check(fib, 1e-9);
    CHECK(c.holds);
    CHECK(c.rhs == doctest::Approx((std::sqrt(2.0) - 1) / 8 * 8.0 / 3));
    auto const id = conjecture4_check(MonomialMap(identity_matrix(2)), 1e-9);
    CHECK(id.rhs == doctest::Approx(gamma_N(2)));
    CHECK(gamma_N(2) == doctest::Approx((std::sqrt(2.0) - 1) / 8));
}

TEST_CASE("inverse degree bound") {
    CHECK(adjugate(fib.matrix()) == IntMatrix{{1, -1}, {-1, 2}});
    CHECK(inverse_degree_bound_check(fib));
    CHECK(inverse_degree_bound_check(MonomialMap(identity_matrix(3))));
    CHECK_THROWS_AS(inverse_degree_bound_check(MonomialMap({{2, 0}, {0, 1}})), std::domain_error);
}

TEST_CASE("m for epsilon") {
    MonomialMap const id(identity_matrix(2));
    auto const half = find_m_epsilon(id, 0.5, 1e-9);
    REQUIRE(half.m.has_value());
    CHECK(*half.m == 5);
    auto const r = find_m_epsilon(id, 0.9, 1e-9);
    REQUIRE(r.m.has_value());
    CHECK(*r.m == 2);
    auto const f = find_m_epsilon(fib, 1.0, 1e-9);
    REQUIRE(f.m.has_value());
    CHECK(m_epsilon_lhs(fib, *f.m) >= f.target);
    auto const none = find_m_epsilon(fib, 1e-6, 1e-9, 4);
    CHECK_FALSE(none.m.has_value());
}

TEST_CASE("random matrices satisfy every inequality") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        std::size_t const n = 1 + static_cast<std::size_t>(i % 5);
        MonomialMap const m(random_nonsingular_matrix(rng, n, -9, 9));
        auto const a = analyze(m, 1e-9);
        CHECK(a.lemma63);
        CHECK(a.prop64_k < n);
        CHECK(a.cor61.holds);
        CHECK(m.det() != 0);
    }
    for (int i = 0; i < 50; ++i) {
        std::size_t const n = 2 + static_cast<std::size_t>(i % 3);
        MonomialMap const m(random_unimodular_matrix(rng, n, 12));
        CHECK(abs(m.det()) == 1);
        CHECK(inverse_degree_bound_check(m));
    }
}

TEST_CASE("bareiss agrees with expansion") {
    IntMatrix const a{{2, -1, 3}, {0, 4, 1}, {5, 2, -2}};
    CHECK(determinant(a) == 2 * (4 * -2 - 1 * 2) + 1 * (0 * -2 - 1 * 5) + 3 * (0 * 2 - 4 * 5));
    CHECK(multiply(a, adjugate(a)) == multiply(identity_matrix(3), IntMatrix{{determinant(a), 0, 0}, {0, determinant(a), 0}, {0, 0, determinant(a)}}));
    CHECK(matrix_power(fib.matrix(), 2) == IntMatrix{{5, 3}, {3, 2}});
}

}  // TEST_SUITE
