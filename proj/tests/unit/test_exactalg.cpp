#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "dyndeg/cyclo.hpp"
#include "dyndeg/jacobian.hpp"
#include "dyndeg/poly_gcd.hpp"
#include "dyndeg/poly_text.hpp"
#include "dyndeg/roots.hpp"

using namespace dyndeg;

namespace {

QPoly P(char const* s) { return parse_poly(s, 3); }

QPoly random_poly(std::mt19937_64& rng, std::size_t terms, std::uint32_t max_deg) {
    std::vector<QPoly::Term> out;
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<std::uint32_t> e(0, max_deg);
    for (std::size_t i = 0; i < terms; ++i) {
        Monomial m;
        m.set(0, e(rng));
        m.set(1, e(rng));
        m.set(2, e(rng));
        out.push_back({m, Rational(coef(rng))});
    }
    return QPoly::from_terms(3, std::move(out));
}

}  // namespace

TEST_SUITE("exactalg") {

TEST_CASE("ring operations") {
    CHECK(P("X+Y") + P("-X") == P("Y"));
    CHECK(P("X+Y") * P("X-Y") == P("X^2-Y^2"));
    CHECK(P("X+Y").pow(2) == P("X^2+2*X*Y+Y^2"));
    CHECK_THROWS_AS(P("X") + parse_poly("X", 2), ArityMismatch);
}

TEST_CASE("gcd examples") {
    CHECK(gcd(P("X^2-Y^2"), P("X^2+2*X*Y+Y^2")) == P("X+Y"));
    CHECK(gcd(P("X*Y"), P("Z^2")) == P("1"));
    CHECK(gcd(P("0"), P("3*X")) == P("X"));
    CHECK(gcd(P("0"), P("0")).is_zero());
}

TEST_CASE("gcd recovers a planted factor") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly const g = random_poly(rng, 3, 2);
        QPoly const a = random_poly(rng, 4, 2);
        QPoly const b = random_poly(rng, 4, 2);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        QPoly const h = gcd(g * a, g * b);
        CHECK(divide_exact(g * a, h).has_value());
        CHECK(divide_exact(g * b, h).has_value());
        CHECK(divide_exact(h, canonical_scaling(g)).has_value());
        CHECK(h == canonical_scaling(h));
    }
}

TEST_CASE("gcd over a prime field is monic") {
    FpPoly const a = reduce_mod_p(P("X^2-Y^2"), 7);
    FpPoly const b = reduce_mod_p(P("X^2+2*X*Y+Y^2"), 7);
    CHECK(gcd(a, b) == reduce_mod_p(P("X+Y"), 7));
    CHECK(gcd(reduce_mod_p(P("3*X+6*Y"), 7), reduce_mod_p(P("0"), 7)) == reduce_mod_p(P("X+2*Y"), 7));
}

TEST_CASE("substitution") {
    QPoly const z = P("Z");
    std::vector<QPoly> to_z{z, z, z};
    CHECK(P("X^2+Y").substitute(to_z) == P("Z^2+Z"));
    std::vector<QPoly> lin{P("X+Y"), P("X-Y"), z};
    CHECK(P("X*Y").substitute(lin) == P("X^2-Y^2"));
    std::vector<std::string> const names{"a", "b", "c"};
    QPoly const v2 = parse_poly("c^2 + a*b", names);
    std::vector<Rational> const at{1, -1, 1};
    CHECK(v2.evaluate(at) == 0);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(5);
    std::vector<QPoly> sub{P("X+2*Z"), P("Y^2-X*Z"), P("3*Y")};
    for (int trial = 0; trial < 20; ++trial) {
        QPoly const a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2);
        CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
        CHECK((a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub));
    }
}

TEST_CASE("jacobian determinant") {
    std::vector<QPoly> id{P("X"), P("Y"), P("Z")};
    CHECK(jacobian_det<Rational>(id) == P("1"));
    std::vector<QPoly> sq{P("X^2"), P("Y^2"), P("Z^2")};
    CHECK(jacobian_det<Rational>(sq) == P("8*X*Y*Z"));
    std::vector<std::string> const names{"X", "Y", "Z", "a", "b", "c"};
    std::vector<QPoly> f{parse_poly("X*Y", names), parse_poly("X*Y + a*Z^2", names),
                         parse_poly("b*Y*Z + c*Z^2", names)};
    CHECK(jacobian_det<Rational>(f, 3) == parse_poly("-2*a*b*Y*Z^2", names));
}

TEST_CASE("text round trip") {
    QPoly const p = P("X^2 - X*Y + Y^2 - 3/2*Z^2");
    CHECK(format_poly(p) == "X^2 - X*Y + Y^2 - 3/2*Z^2");
    CHECK(parse_poly(format_poly(p), 3) == p);
    CHECK(P("(X+1)(X-1)") == P("X^2-1"));
    CHECK_THROWS_AS(P("X +* Y"), ParseError);
    CHECK_THROWS_AS(P("W"), ParseError);
}

TEST_CASE("squarefree part") {
    QPoly const p = parse_poly("(X-1)^3*(X+2)", 1);
    CHECK(squarefree_part(p) == parse_poly("(X-1)*(X+2)", 1));
}

TEST_CASE("numeric roots") {
    std::vector<Rational> const quad{1, 0, 1};
    auto const r = polynomial_roots(quad);
    REQUIRE(r.size() == 2);
    for (auto z : r) CHECK(std::abs(std::abs(z) - 1) < 1e-12);
    std::vector<Rational> const cubic{-6, 11, -6, 1};
    auto roots = polynomial_roots(cubic);
    std::sort(roots.begin(), roots.end(), [](auto x, auto y) { return x.real() < y.real(); });
    for (int k = 0; k < 3; ++k) CHECK(roots[k].real() == doctest::Approx(k + 1).epsilon(1e-12));
    std::vector<Rational> const zero_root{0, 0, 1, 1};
    CHECK(polynomial_roots(zero_root).size() == 3);
}

TEST_CASE("roots of cyclotomic polynomials lie on the unit circle") {
    for (std::size_t n : {17, 19, 23, 29, 31, 37, 41, 47}) {
        ZPoly const phi = cyclotomic(n);
        std::vector<Rational> c(*phi.degree() + 1);
        for (auto const& t : phi.terms()) c[t.mono[0]] = Rational(t.coeff);
        auto const roots = polynomial_roots(c);
        CHECK(roots.size() == c.size() - 1);
        for (auto z : roots) {
            CHECK(std::abs(std::abs(z) - 1) < 1e-12);
            CHECK(scaled_residual(c, z) < 1e-13);
        }
    }
}

}  // TEST_SUITE
