#include "dyndeg/poly_gcd.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace dyndeg {

namespace {

// --- arithmetic modulo a word-sized prime -----------------------------------

struct ModP {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a >= p - b ? a - (p - b) : a + b; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p - b); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e != 0) {
            if (e & 1U) r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

using Dense = std::vector<std::uint64_t>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Euclid in F_p[x]; the result is not normalized.
Dense dense_gcd(Dense a, Dense b, ModP const& f) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        if (a.size() >= b.size()) {
            std::uint64_t const inv_lead = f.inv(b.back());
            while (a.size() >= b.size()) {
                std::uint64_t const q = f.mul(a.back(), inv_lead);
                std::size_t const shift = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) {
                    a[i + shift] = f.sub(a[i + shift], f.mul(q, b[i]));
                }
                trim(a);
                if (a.empty()) break;
            }
        }
        std::swap(a, b);
    }
    return a;
}

std::uint64_t residue(Integer const& c, std::uint64_t p) { return mpz_fdiv_ui(c.get_mpz_t(), p); }
std::uint64_t residue(Zp const& c, std::uint64_t) { return c.value(); }

template <class C>
Dense univariate_image(MultiPoly<C> const& poly, std::size_t var, std::vector<Dense> const& powers,
                       ModP const& f) {
    Dense out(poly.degree_in(var) + 1, 0);
    for (auto const& t : poly.terms()) {
        std::uint64_t v = residue(t.coeff, f.p);
        for (std::size_t u = 0; u < poly.num_vars() && v != 0; ++u) {
            if (u != var && t.mono[u] != 0) v = f.mul(v, powers[u][t.mono[u]]);
        }
        out[t.mono[var]] = f.add(out[t.mono[var]], v);
    }
    trim(out);
    return out;
}

constexpr std::uint64_t kImagePrimes[] = {2305843009213693951ULL, 4611686018427387847ULL};

// True only if the family is proven coprime. Inputs must be nonzero and
// free of monomial content.
template <class C>
bool certify_coprime(std::span<MultiPoly<C> const> polys, std::uint64_t p, std::mt19937_64& rng) {
    if (polys.empty()) return false;
    ModP const f{p};
    std::size_t const n = polys.front().num_vars();
    bool const homogeneous =
        std::all_of(polys.begin(), polys.end(), [](auto const& q) { return q.is_homogeneous(); });

    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < n; ++v) {
        bool const everywhere =
            std::all_of(polys.begin(), polys.end(), [&](auto const& q) { return q.degree_in(v) > 0; });
        if (everywhere) vars.push_back(v);
    }
    // A homogeneous gcd free of monomial content cannot live in a single
    // variable, so one variable may be skipped.
    if (homogeneous && !vars.empty()) vars.pop_back();

    std::uniform_int_distribution<std::uint64_t> pick(1, p - 1);
    for (std::size_t const v : vars) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < polys.size(); ++i) {
            if (polys[i].degree_in(v) < polys[best].degree_in(v)) best = i;
        }
        bool certified = false;
        for (int attempt = 0; attempt < 3 && !certified; ++attempt) {
            std::vector<Dense> powers(n);
            for (std::size_t u = 0; u < n; ++u) {
                if (u == v) continue;
                std::uint64_t maxdeg = 0;
                for (auto const& q : polys) maxdeg = std::max(maxdeg, q.degree_in(u));
                std::uint64_t const r = pick(rng);
                powers[u].assign(maxdeg + 1, 1);
                for (std::uint64_t k = 1; k <= maxdeg; ++k) powers[u][k] = f.mul(powers[u][k - 1], r);
            }
            Dense g = univariate_image(polys[best], v, powers, f);
            if (g.size() != polys[best].degree_in(v) + 1) continue;  // leading coefficient vanished
            long deg = static_cast<long>(g.size()) - 1;
            for (std::size_t i = 0; i < polys.size() && deg > 0; ++i) {
                if (i == best) continue;
                g = dense_gcd(std::move(g), univariate_image(polys[i], v, powers, f), f);
                deg = static_cast<long>(g.size()) - 1;
            }
            if (deg > 0) return false;
            certified = true;
        }
        if (!certified) return false;
    }
    return true;
}

// --- content helpers ----------------------------------------------------------

template <class C>
MultiPoly<C> unshift(MultiPoly<C> const& p, Monomial const& m) {
    if (m.is_one()) return p;
    std::vector<typename MultiPoly<C>::Term> terms;
    terms.reserve(p.size());
    for (auto const& t : p.terms()) terms.push_back({t.mono / m, t.coeff});
    return MultiPoly<C>::from_terms(p.num_vars(), std::move(terms), p.ctx());
}

template <class C>
MultiPoly<C> one_like(MultiPoly<C> const& p) {
    return MultiPoly<C>::constant(p.num_vars(), coeff_traits<C>::from_int(p.ctx(), 1));
}

ZPoly normalize_unit(ZPoly p) {
    if (!p.is_zero() && sgn(p.leading_coeff()) < 0) p = -p;
    return p;
}

FpPoly normalize_unit(FpPoly p) {
    if (p.is_zero()) return p;
    Zp const inv = p.leading_coeff().inverse();
    return p * inv;
}

Integer constant_gcd(Integer const& a, Integer const& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Zp constant_gcd(Zp const& a, Zp const& b) {
    return Zp(a.is_zero() && b.is_zero() ? 0 : 1, a.modulus() != 0 ? a.modulus() : b.modulus());
}

template <class C>
std::size_t main_var(MultiPoly<C> const& a, MultiPoly<C> const& b) {
    for (std::size_t v = a.num_vars(); v-- > 0;) {
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    }
    return 0;
}

template <class C>
MultiPoly<C> leading_coeff_in(MultiPoly<C> const& p, std::size_t var) {
    return p.coefficients_in(var).back();
}

template <class C>
MultiPoly<C> exact(std::optional<MultiPoly<C>> q) {
    if (!q) throw std::logic_error("expected exact polynomial division");
    return std::move(*q);
}

// --- subresultant remainder sequences -------------------------------------------

template <class C>
MultiPoly<C> prs_gcd(MultiPoly<C> const& a, MultiPoly<C> const& b);

template <class C>
MultiPoly<C> content_in(MultiPoly<C> const& p, std::size_t var) {
    auto const coeffs = p.coefficients_in(var);
    MultiPoly<C> g(p.num_vars(), p.ctx());
    for (auto const& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? normalize_unit(c) : prs_gcd(g, c);
        if (g.is_constant() && coeff_traits<C>::is_one(g.leading_coeff())) break;
    }
    return g;
}

template <class C>
MultiPoly<C> pseudo_remainder(MultiPoly<C> const& a, MultiPoly<C> const& b, std::size_t var) {
    auto const n = b.degree_in(var);
    auto const lcb = leading_coeff_in(b, var);
    MultiPoly<C> r = a;
    std::uint64_t e = a.degree_in(var) - n + 1;
    while (!r.is_zero() && r.degree_in(var) >= n) {
        auto const dr = r.degree_in(var);
        auto const lcr = leading_coeff_in(r, var);
        r = lcb * r - lcr.shifted(Monomial::variable(var, static_cast<Monomial::exponent_type>(dr - n))) * b;
        --e;
    }
    if (e > 0) r = lcb.pow(e) * r;
    return r;
}

template <class C>
MultiPoly<C> prs_gcd(MultiPoly<C> const& a, MultiPoly<C> const& b) {
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    if (a.is_constant() && b.is_constant()) {
        return normalize_unit(MultiPoly<C>::constant(a.num_vars(), constant_gcd(a.leading_coeff(), b.leading_coeff())));
    }
    std::size_t const v = main_var(a, b);
    auto const ca = content_in(a, v);
    auto const cb = content_in(b, v);
    auto const c = prs_gcd(ca, cb);
    auto pa = exact(divide_exact(a, ca));
    auto pb = exact(divide_exact(b, cb));
    if (pa.degree_in(v) == 0 || pb.degree_in(v) == 0) return normalize_unit(c);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

    MultiPoly<C> g1 = std::move(pa), g2 = std::move(pb);
    MultiPoly<C> g = one_like(g1), h = one_like(g1);
    while (true) {
        auto const d = g1.degree_in(v) - g2.degree_in(v);
        auto r = pseudo_remainder(g1, g2, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            g2 = one_like(g1);
            break;
        }
        g1 = std::move(g2);
        g2 = exact(divide_exact(r, g * h.pow(d)));
        g = leading_coeff_in(g1, v);
        if (d > 0) h = exact(divide_exact(g.pow(d), h.pow(d - 1)));
    }
    if (!g2.is_constant()) g2 = exact(divide_exact(g2, content_in(g2, v)));
    else g2 = one_like(g2);
    return normalize_unit(c * g2);
}

// --- heuristic gcd over Z --------------------------------------------------------

Integer max_norm(ZPoly const& p) {
    Integer m = 0;
    for (auto const& t : p.terms()) {
        if (mpz_cmpabs(t.coeff.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coeff);
    }
    return m;
}

constexpr std::size_t kHeuBitLimit = std::size_t{1} << 22;

std::optional<ZPoly> heuristic_gcd(ZPoly const& a, ZPoly const& b);

std::optional<ZPoly> reconstruct(ZPoly gamma, std::size_t var, Integer const& xi, std::uint64_t max_deg) {
    std::size_t const n = gamma.num_vars();
    ZPoly out(n);
    Integer half = xi / 2;
    for (std::uint64_t i = 0; !gamma.is_zero(); ++i) {
        if (i > max_deg) return std::nullopt;
        std::vector<ZPoly::Term> digit;
        digit.reserve(gamma.size());
        for (auto const& t : gamma.terms()) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            digit.push_back({t.mono, r});
        }
        auto g = ZPoly::from_terms(n, std::move(digit));
        gamma -= g;
        gamma = gamma.map_coeffs<Integer>([&](Integer const& c) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
            return q;
        });
        out += g.shifted(Monomial::variable(var, static_cast<Monomial::exponent_type>(i)));
    }
    return out;
}

std::optional<ZPoly> heuristic_gcd(ZPoly const& a, ZPoly const& b) {
    std::size_t const n = a.num_vars();
    Integer const ca = integer_content(a), cb = integer_content(b);
    Integer const c = constant_gcd(ca, cb);
    if (a.is_constant() || b.is_constant()) return ZPoly::constant(n, c);

    auto divide_content = [](ZPoly const& p, Integer const& k) {
        return p.map_coeffs<Integer>([&](Integer const& x) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
            return q;
        });
    };
    ZPoly const pa = divide_content(a, ca), pb = divide_content(b, cb);

    std::size_t const v = main_var(pa, pb);
    std::uint64_t const max_deg = std::min(pa.degree_in(v), pb.degree_in(v));
    std::uint64_t const eval_deg = std::max(pa.degree_in(v), pb.degree_in(v));
    Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max<std::uint64_t>(eval_deg, 1) > kHeuBitLimit) {
            return std::nullopt;
        }
        auto const alpha = pa.evaluate_var(v, xi);
        auto const beta = pb.evaluate_var(v, xi);
        if (auto gamma = heuristic_gcd(alpha, beta)) {
            if (auto g = reconstruct(std::move(*gamma), v, xi, max_deg); g && !g->is_zero()) {
                ZPoly cand = primitive_part(*g);
                if (divide_exact(pa, cand) && divide_exact(pb, cand)) return cand * c;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

// --- drivers ---------------------------------------------------------------------------

ZPoly gcd_core(ZPoly const& a, ZPoly const& b);

ZPoly gcd_z(ZPoly const& a, ZPoly const& b) {
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    Integer const c = constant_gcd(integer_content(a), integer_content(b));
    Monomial const ma = a.monomial_content(), mb = b.monomial_content();
    Monomial const m = Monomial::gcd(ma, mb);
    ZPoly const pa = unshift(primitive_part(a), ma);
    ZPoly const pb = unshift(primitive_part(b), mb);
    ZPoly core = (pa.is_constant() || pb.is_constant()) ? one_like(pa) : gcd_core(pa, pb);
    return core.shifted(m) * c;
}

ZPoly homogenize_in(ZPoly const& p, std::size_t var) {
    auto const d = p.degree().value_or(0);
    std::vector<ZPoly::Term> terms;
    terms.reserve(p.size());
    for (auto const& t : p.terms()) {
        Monomial m = t.mono;
        m.set(var, static_cast<Monomial::exponent_type>(d - m.degree()));
        terms.push_back({m, t.coeff});
    }
    return ZPoly::from_terms(p.num_vars(), std::move(terms));
}

// Inputs: primitive, free of monomial content, nonconstant.
ZPoly gcd_core(ZPoly const& a, ZPoly const& b) {
    std::mt19937_64 rng(0x5eed5eedULL);
    ZPoly const pair[] = {a, b};
    for (auto const p : kImagePrimes) {
        if (certify_coprime<Integer>(pair, p, rng)) return one_like(a);
    }
    if (a.is_homogeneous() && b.is_homogeneous()) {
        std::size_t const w = main_var(a, b);
        auto const g = gcd_z(a.evaluate_var(w, Integer(1)), b.evaluate_var(w, Integer(1)));
        return primitive_part(homogenize_in(g, w));
    }
    if (auto g = heuristic_gcd(a, b)) return primitive_part(*g);
    return primitive_part(prs_gcd(a, b));
}

FpPoly gcd_fp(FpPoly const& a, FpPoly const& b) {
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    Monomial const ma = a.monomial_content(), mb = b.monomial_content();
    Monomial const m = Monomial::gcd(ma, mb);
    FpPoly const pa = unshift(a, ma), pb = unshift(b, mb);
    if (pa.is_constant() || pb.is_constant()) return one_like(pa).shifted(m);
    std::mt19937_64 rng(0x5eed5eedULL);
    FpPoly const pair[] = {pa, pb};
    if (certify_coprime<Zp>(pair, a.ctx().modulus, rng)) return one_like(pa).shifted(m);
    return normalize_unit(prs_gcd(pa, pb)).shifted(m);
}

template <class P, class PairGcd, class Certify>
P gcd_family(std::span<P const> polys, PairGcd pair_gcd, Certify certify) {
    std::vector<P> live;
    for (auto const& p : polys) {
        if (!p.is_zero()) live.push_back(p);
    }
    if (live.empty()) {
        if (polys.empty()) throw std::invalid_argument("gcd of an empty family");
        return polys.front();
    }
    if (live.size() == 1) return pair_gcd(live.front(), P(live.front().num_vars(), live.front().ctx()));

    Monomial m = live.front().monomial_content();
    for (auto const& p : live) m = Monomial::gcd(m, p.monomial_content());
    std::vector<P> stripped;
    for (auto const& p : live) stripped.push_back(unshift(p, p.monomial_content()));
    if (certify(std::span<P const>(stripped))) return pair_gcd(one_like(live.front()).shifted(m), P(live.front().num_vars(), live.front().ctx()));

    std::sort(live.begin(), live.end(), [](P const& x, P const& y) { return x.size() < y.size(); });
    P g = pair_gcd(live[0], live[1]);
    for (std::size_t i = 2; i < live.size() && !g.is_constant(); ++i) g = pair_gcd(g, live[i]);
    return g;
}

}  // namespace

// --- public API ---------------------------------------------------------------------

Integer integer_content(ZPoly const& p) {
    Integer g = 0;
    for (auto const& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(ZPoly const& p) {
    if (p.is_zero()) return p;
    Integer c = integer_content(p);
    if (sgn(p.leading_coeff()) < 0) c = -c;
    if (c == 1) return p;
    return p.map_coeffs<Integer>([&](Integer const& x) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        return q;
    });
}

ZPoly primitive_integer(QPoly const& p) {
    Integer lcm = 1;
    for (auto const& t : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    ZPoly z = p.map_coeffs<Integer>([&](Rational const& q) {
        Integer r;
        mpz_divexact(r.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        return Integer(r * q.get_num());
    });
    return primitive_part(z);
}

QPoly canonical_scaling(QPoly const& p) { return to_rational_poly(primitive_integer(p)); }

FpPoly canonical_scaling(FpPoly const& p) { return normalize_unit(p); }

ZPoly gcd(ZPoly const& p, ZPoly const& q) {
    if (p.num_vars() != q.num_vars()) throw ArityMismatch("gcd of polynomials over different rings");
    return gcd_z(p, q);
}

QPoly gcd(QPoly const& p, QPoly const& q) {
    if (p.num_vars() != q.num_vars()) throw ArityMismatch("gcd of polynomials over different rings");
    return to_rational_poly(primitive_part(gcd_z(primitive_integer(p), primitive_integer(q))));
}

FpPoly gcd(FpPoly const& p, FpPoly const& q) {
    if (p.num_vars() != q.num_vars()) throw ArityMismatch("gcd of polynomials over different rings");
    if (!(p.ctx() == q.ctx())) throw DomainMismatch("gcd of polynomials over different prime fields");
    return gcd_fp(p, q);
}

QPoly gcd(std::span<QPoly const> polys) {
    std::vector<ZPoly> ints;
    for (auto const& p : polys) {
        if (p.num_vars() != polys.front().num_vars()) throw ArityMismatch("gcd family over different rings");
        ints.push_back(primitive_integer(p));
    }
    auto const g = gcd_family<ZPoly>(
        std::span<ZPoly const>(ints), [](ZPoly const& a, ZPoly const& b) { return primitive_part(gcd_z(a, b)); },
        [](std::span<ZPoly const> family) {
            std::mt19937_64 rng(0x5eed5eedULL);
            for (auto const p : kImagePrimes) {
                if (certify_coprime<Integer>(family, p, rng)) return true;
            }
            return false;
        });
    return to_rational_poly(primitive_part(g));
}

FpPoly gcd(std::span<FpPoly const> polys) {
    for (auto const& p : polys) {
        if (p.num_vars() != polys.front().num_vars()) throw ArityMismatch("gcd family over different rings");
        if (!(p.ctx() == polys.front().ctx())) throw DomainMismatch("gcd family over different prime fields");
    }
    return gcd_family<FpPoly>(
        polys, [](FpPoly const& a, FpPoly const& b) { return gcd_fp(a, b); },
        [](std::span<FpPoly const> family) {
            std::mt19937_64 rng(0x5eed5eedULL);
            return certify_coprime<Zp>(family, family.front().ctx().modulus, rng);
        });
}

QPoly squarefree_part(QPoly const& p) {
    if (p.num_vars() != 1) throw ArityMismatch("squarefree_part expects a univariate polynomial");
    if (p.is_zero() || p.is_constant()) return canonical_scaling(p);
    auto const g = gcd(p, p.derivative(0));
    return canonical_scaling(*divide_exact(p, g));
}

}  // namespace dyndeg
