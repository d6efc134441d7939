#include "dyndeg/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dyndeg/roots.hpp"

namespace dyndeg {

namespace {

void check_square(IntMatrix const& a) {
    if (a.empty()) throw std::invalid_argument("matrix must be nonempty");
    for (auto const& row : a) {
        if (row.size() != a.size()) throw std::invalid_argument("matrix must be square");
    }
}

Integer max_plus(Integer const& x) { return x > 0 ? x : Integer(0); }

double log_of(Integer const& z) {
    long exp = 0;
    double const mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double to_double(Integer const& z) { return z.get_d(); }

// True iff every root of sum q[k] z^k lies strictly inside the unit disk
// (Schur-Cohn reduction).
bool all_roots_inside_unit_disk(std::vector<Rational> q) {
    while (q.size() > 1) {
        std::size_t const n = q.size() - 1;
        Rational const a0 = q.front(), an = q.back();
        if (abs(an) <= abs(a0)) return false;
        std::vector<Rational> next(n);
        for (std::size_t k = 0; k < n; ++k) next[k] = an * q[k + 1] - a0 * q[n - 1 - k];
        Rational const lead = next.back();
        for (auto& c : next) c /= lead;
        q = std::move(next);
    }
    return true;
}

// True iff lambda < r for the polynomial with coefficients p (low to high).
bool radius_below(std::vector<Rational> const& p, Rational const& r) {
    std::vector<Rational> q(p.size());
    Rational power = 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
        q[k] = p[k] * power;
        power *= r;
    }
    return all_roots_inside_unit_disk(std::move(q));
}

std::uint32_t small_exponent(Integer const& z) {
    if (z < 0 || z > std::numeric_limits<std::int32_t>::max()) throw std::overflow_error("exponent out of range");
    return static_cast<std::uint32_t>(z.get_ui());
}

void check_tolerance(double rel_tol) {
    if (!(rel_tol > 0) || rel_tol > 1e-3) throw std::invalid_argument("relative tolerance must lie in (0, 1e-3]");
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(IntMatrix const& a, IntMatrix const& b) {
    std::size_t const n = a.size();
    IntMatrix c(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

IntMatrix matrix_power(IntMatrix const& a, std::uint64_t e) {
    IntMatrix result = identity_matrix(a.size());
    IntMatrix base = a;
    while (e != 0) {
        if (e & 1U) result = multiply(result, base);
        e >>= 1U;
        if (e != 0) base = multiply(base, base);
    }
    return result;
}

Integer determinant(IntMatrix const& input) {
    check_square(input);
    IntMatrix a = input;
    std::size_t const n = a.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMatrix adjugate(IntMatrix const& a) {
    check_square(a);
    std::size_t const n = a.size();
    if (n == 1) return {{Integer(1)}};
    IntMatrix adj(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<Integer> row;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != i) row.push_back(a[r][c]);
                }
                minor.push_back(std::move(row));
            }
            Integer const d = determinant(minor);
            adj[i][j] = (i + j) % 2 == 0 ? d : Integer(-d);
        }
    }
    return adj;
}

MonomialMap::MonomialMap(IntMatrix a) : a_(std::move(a)) {
    check_square(a_);
    det_ = determinant(a_);
    if (det_ == 0) throw SingularMatrix("monomial map needs det(A) != 0");
}

Integer degree_D(IntMatrix const& a) {
    check_square(a);
    std::size_t const n = a.size();
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Integer col = 0;
        for (std::size_t i = 0; i < n; ++i) col = std::max(col, Integer(-a[i][j]));
        total += col;
    }
    Integer rows = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Integer s = 0;
        for (auto const& x : a[i]) s += x;
        rows = std::max(rows, s);
    }
    return total + max_plus(rows);
}

Integer sup_norm(IntMatrix const& a) {
    Integer m = 0;
    for (auto const& row : a) {
        for (auto const& x : row) m = std::max(m, Integer(abs(x)));
    }
    return m;
}

ProjectiveMap<Rational> homogenize(MonomialMap const& m) {
    auto const& a = m.matrix();
    std::size_t const n = a.size();
    if (n + 1 > max_vars) throw ArityMismatch("monomial map too large to homogenize");
    std::vector<Integer> shift(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) shift[j] = std::max(shift[j], Integer(-a[i][j]));
    }
    Integer const d = degree_D(a);
    std::vector<QPoly> coords;
    for (std::size_t i = 0; i <= n; ++i) {
        Monomial mono;
        Integer deg = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Integer const e = (i < n ? a[i][j] : Integer(0)) + shift[j];
            mono.set(j, small_exponent(e));
            deg += e;
        }
        mono.set(n, small_exponent(d - deg));
        coords.push_back(QPoly::term(n + 1, mono, Rational(1)));
    }
    return ProjectiveMap<Rational>::create(std::move(coords));
}

std::vector<Integer> char_poly(IntMatrix const& a) {
    check_square(a);
    std::size_t const n = a.size();
    // Bareiss on xI - A over Z[x]; leading principal minors are monic, so
    // no pivoting is needed.
    std::vector<std::vector<ZPoly>> m(n, std::vector<ZPoly>(n, ZPoly(1)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = ZPoly::constant(1, Integer(-a[i][j]));
            if (i == j) m[i][j] += ZPoly::variable(1, 0);
        }
    }
    ZPoly prev = ZPoly::constant(1, Integer(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = *divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
        }
        prev = m[k][k];
    }
    ZPoly const& det = m[n - 1][n - 1];
    std::vector<Integer> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[n - k] = det.coeff_of(Monomial::variable(0, static_cast<std::uint32_t>(k)));
    return out;
}

SpectralRadius spectral_radius(MonomialMap const& mm, double rel_tol) {
    check_tolerance(rel_tol);
    auto const cp = char_poly(mm.matrix());
    std::vector<Rational> p(cp.size());
    for (std::size_t k = 0; k < cp.size(); ++k) p[k] = Rational(cp[cp.size() - 1 - k]);

    double estimate = 1;
    try {
        for (auto const& z : polynomial_roots(p)) estimate = std::max(estimate, std::abs(z));
    } catch (RootFindingError const&) {
        estimate = 1;
    }

    // |det A| >= 1, so lambda >= 1: radius 1 never has all roots strictly inside.
    Rational lo = std::max(1.0, estimate * (1 - 1e-9));
    if (radius_below(p, lo)) lo = 1;
    Rational hi = estimate * (1 + 1e-9) + 1e-12;
    for (int i = 0; !radius_below(p, hi); ++i) {
        if (i > 200) throw SpectralRadiusError("could not bracket the spectral radius");
        hi *= 2;
    }
    for (int i = 0; hi - lo > rel_tol * lo; ++i) {
        if (i > 400) throw SpectralRadiusError("spectral radius bisection did not converge");
        Rational mid = (lo + hi) / 2;
        if (radius_below(p, mid)) hi = mid;
        else lo = mid;
    }
    SpectralRadius out;
    out.lower = lo.get_d();
    out.upper = hi.get_d();
    out.value = Rational((lo + hi) / 2).get_d();
    return out;
}

double gamma_N(std::size_t n) {
    double const nn = static_cast<double>(n);
    return (std::pow(2.0, 1.0 / nn) - 1) / (2 * nn * nn);
}

bool verify_norm_equivalence(MonomialMap const& m) {
    Integer const d = degree_D(m);
    Integer const norm = sup_norm(m.matrix());
    Integer const n = static_cast<unsigned long>(m.dimension());
    return d <= 2 * n * norm && norm <= n * d;
}

std::size_t find_k_contraction(MonomialMap const& m, double rel_tol) {
    std::size_t const n = m.dimension();
    double const lambda = spectral_radius(m, rel_tol).value;
    double const c = std::pow(2.0, 1.0 / static_cast<double>(n)) - 1;
    IntMatrix power = identity_matrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        IntMatrix next = multiply(power, m.matrix());
        double const lhs = to_double(sup_norm(next)) * c;
        double const rhs = lambda * (1 + 2 * rel_tol) * to_double(sup_norm(power));
        if (lhs <= rhs) return k;
        power = std::move(next);
    }
    throw InvariantViolation("no contraction index in [0, N-1]");
}

Conjecture4Check conjecture4_check(MonomialMap const& m, double rel_tol) {
    std::size_t const n = m.dimension();
    Conjecture4Check out;
    out.lhs = spectral_radius(m, rel_tol).value;
    IntMatrix power = identity_matrix(n);
    Integer prev_d = 1;  // D(A^0)
    double min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        power = multiply(power, m.matrix());
        Integer const d = degree_D(power);
        min_ratio = std::min(min_ratio, Rational(d, prev_d).get_d());
        prev_d = d;
    }
    out.rhs = gamma_N(n) * min_ratio;
    out.holds = out.lhs * (1 + 2 * rel_tol) >= out.rhs;
    return out;
}

bool inverse_degree_bound_check(MonomialMap const& m) {
    if (abs(m.det()) != 1) throw std::domain_error("inverse degree bound needs |det A| = 1");
    IntMatrix inv = adjugate(m.matrix());
    if (m.det() < 0) {
        for (auto& row : inv) {
            for (auto& x : row) x = -x;
        }
    }
    Integer bound;
    mpz_pow_ui(bound.get_mpz_t(), degree_D(m).get_mpz_t(), m.dimension() - 1);
    return degree_D(inv) <= bound;
}

double m_epsilon_lhs(MonomialMap const& m, std::size_t mm) {
    std::size_t const n = m.dimension();
    IntMatrix const step = matrix_power(m.matrix(), mm);
    IntMatrix power = identity_matrix(n);
    double const log_gamma = std::log(gamma_N(n));
    double best = std::numeric_limits<double>::infinity();
    Integer prev_d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        power = multiply(power, step);
        Integer const d = degree_D(power);
        best = std::min(best, (log_gamma + log_of(d) - log_of(prev_d)) / static_cast<double>(mm));
        prev_d = d;
    }
    return std::exp(best);
}

MEpsilonResult find_m_epsilon(MonomialMap const& m, double epsilon, double rel_tol, std::size_t m_cap) {
    if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
    MEpsilonResult out;
    out.cap = m_cap;
    out.target = spectral_radius(m, rel_tol).value - epsilon;
    for (std::size_t mm = 1; mm <= m_cap; ++mm) {
        if (out.target <= 0 || m_epsilon_lhs(m, mm) >= out.target) {
            out.m = mm;
            break;
        }
    }
    return out;
}

MonomialAnalysis analyze(MonomialMap const& m, double rel_tol) {
    MonomialAnalysis out;
    out.n = m.dimension();
    out.d = degree_D(m);
    out.norm = sup_norm(m.matrix());
    out.char_poly = char_poly(m.matrix());
    out.lambda = spectral_radius(m, rel_tol);
    out.lemma63 = verify_norm_equivalence(m);
    out.prop64_k = find_k_contraction(m, rel_tol);
    out.cor61 = conjecture4_check(m, rel_tol);
    if (abs(m.det()) == 1) out.prop65 = inverse_degree_bound_check(m);
    return out;
}

IntMatrix random_nonsingular_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    while (true) {
        IntMatrix a(n, std::vector<Integer>(n));
        for (auto& row : a) {
            for (auto& x : row) x = entry(rng);
        }
        if (determinant(a) != 0) return a;
    }
}

IntMatrix random_unimodular_matrix(std::mt19937_64& rng, std::size_t n, std::size_t steps) {
    IntMatrix a = identity_matrix(n);
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    std::uniform_int_distribution<int> op(0, 3);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t const i = row(rng), j = row(rng);
        switch (op(rng)) {
            case 0:
            case 1:
                if (i != j) {
                    int const k = mult(rng);
                    for (std::size_t c = 0; c < n; ++c) a[i][c] += k * a[j][c];
                }
                break;
            case 2:
                std::swap(a[i], a[j]);
                break;
            default:
                for (auto& x : a[i]) x = -x;
                break;
        }
    }
    return a;
}

}  // namespace dyndeg
