#include "dyndeg/fabc.hpp"

#include <algorithm>
#include <cmath>

#include "dyndeg/cyclo.hpp"
#include "dyndeg/jacobian.hpp"
#include "dyndeg/poly_gcd.hpp"
#include "dyndeg/poly_text.hpp"
#include "dyndeg/roots.hpp"

namespace dyndeg {

namespace {

FabcParams reduced(FabcParams p) {
    p.a.canonicalize();
    p.b.canonicalize();
    p.c.canonicalize();
    return p;
}

void require_nondegenerate(FabcParams const& p) {
    if (sgn(p.a) == 0 || sgn(p.b) == 0 || sgn(p.c) == 0) {
        throw DegenerateParameters("f_{a,b,c} needs abc != 0");
    }
}

// [XY, XY + aZ^2, bYZ + cZ^2] with a, b, c given as polynomials in the
// ambient ring (constants or parameter variables).
template <class C>
std::vector<MultiPoly<C>> raw_forms(std::size_t n, MultiPoly<C> const& a, MultiPoly<C> const& b,
                                    MultiPoly<C> const& c) {
    auto const ctx = a.ctx();
    auto const x = MultiPoly<C>::variable(n, 0, ctx);
    auto const y = MultiPoly<C>::variable(n, 1, ctx);
    auto const z = MultiPoly<C>::variable(n, 2, ctx);
    return {x * y, x * y + a * z * z, b * y * z + c * z * z};
}

std::vector<QPoly> concrete_forms(FabcParams const& p) {
    return raw_forms<Rational>(3, QPoly::constant(3, p.a), QPoly::constant(3, p.b), QPoly::constant(3, p.c));
}

std::vector<QPoly> symbolic_forms() {
    std::size_t const n = fabc_symbolic_vars;
    return raw_forms<Rational>(n, QPoly::variable(n, 3), QPoly::variable(n, 4), QPoly::variable(n, 5));
}

std::vector<QPoly> inverse_forms(std::size_t n, QPoly const& a, QPoly const& b, QPoly const& c) {
    auto const x = QPoly::variable(n, 0);
    auto const y = QPoly::variable(n, 1);
    auto const z = QPoly::variable(n, 2);
    QPoly const l = c * x - c * y + a * z;
    return {a * b * b * x * (y - x), l * l, b * l * (y - x)};
}

template <class C>
std::vector<C> recurrence(C const& ab, C const& c, C const& one, std::size_t n_max) {
    std::vector<C> v{one};
    if (n_max >= 1) v.push_back(c);
    while (v.size() <= n_max) {
        std::size_t const k = v.size();
        v.push_back(c * v[k - 1] + ab * v[k - 2]);
    }
    return v;
}

// Order of zeta with c^2/(ab) = kappa, if f is unstable.
std::optional<std::size_t> unstable_order(Rational const& kappa) {
    Rational const w = -2 - kappa;
    for (auto const& v : rational_two_cos_values()) {
        if (v.order >= 3 && w == Rational(v.value)) return v.order;
    }
    return std::nullopt;
}

std::vector<Rational> univariate_coeffs(QPoly const& p) {
    std::vector<Rational> out;
    for (auto const& c : p.coefficients_in(0)) out.push_back(c.is_zero() ? Rational(0) : c.leading_coeff());
    return out;
}

std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 48) throw std::overflow_error("coefficient too large to enumerate divisors");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Rational roots of a univariate polynomial.
std::vector<Rational> rational_roots(QPoly const& p) {
    std::vector<Rational> roots;
    if (p.is_zero() || p.is_constant()) return roots;
    ZPoly z = primitive_integer(p);
    if (z.monomial_content().degree() > 0) {
        roots.emplace_back(0);
        z = *divide_exact(z, ZPoly::term(1, z.monomial_content(), Integer(1)));
    }
    if (z.is_constant()) return roots;
    Integer const a0 = z.coeff_of(Monomial()), an = z.leading_coeff();
    QPoly const q = to_rational_poly(z);
    for (auto const& num : divisors(a0)) {
        for (auto const& den : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(s * num, den);
                cand.canonicalize();
                Rational const pt[] = {cand};
                if (sgn(q.evaluate(pt)) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) {
                    roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Zeros on P^1 of a binary form in variables u, v of a three-variable
// ring (the third variable absent), returned as (u, v) pairs.
std::vector<std::pair<Rational, Rational>> binary_form_zeros(QPoly const& g, std::size_t u) {
    std::vector<std::pair<Rational, Rational>> out;
    std::vector<Rational> pt(3, Rational(0));
    pt[u] = 1;
    if (sgn(g.evaluate(pt)) == 0) out.emplace_back(1, 0);
    // g(x, 1) as a polynomial in one variable.
    std::vector<QPoly::Term> terms;
    for (auto const& t : g.terms()) terms.push_back({Monomial::variable(0, t.mono[u]), t.coeff});
    for (auto const& r : rational_roots(QPoly::from_terms(1, std::move(terms)))) out.emplace_back(r, 1);
    return out;
}

QPoly family_var_poly(QPoly const& p) {
    if (p.num_vars() != 1) throw ArityMismatch("family polynomials must be univariate");
    return p;
}

std::complex<double> eval_complex(QPoly const& p, std::complex<double> t) {
    auto const coeffs = univariate_coeffs(p);
    std::complex<double> acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k].get_d();
    return acc;
}

}  // namespace

std::vector<std::string> fabc_symbolic_names() { return {"X", "Y", "Z", "a", "b", "c"}; }

ProjectiveMap<Rational> build_map(FabcParams const& raw) {
    FabcParams const p = reduced(raw);
    require_nondegenerate(p);
    return ProjectiveMap<Rational>::create(concrete_forms(p));
}

ProjectiveMap<Rational> build_map_symbolic() { return ProjectiveMap<Rational>::create(symbolic_forms(), 3); }

ProjectiveMap<Zp> build_map_mod_p(Integer const& a, Integer const& b, Integer const& c, std::uint64_t p) {
    Zp const ra = Zp::from_integer(a, p), rb = Zp::from_integer(b, p), rc = Zp::from_integer(c, p);
    if (ra.is_zero() || rb.is_zero() || rc.is_zero()) throw DegenerateParameters("p divides abc");
    return ProjectiveMap<Zp>::create(
        raw_forms<Zp>(3, FpPoly::constant(3, ra), FpPoly::constant(3, rb), FpPoly::constant(3, rc)));
}

ProjectiveMap<Rational> inverse_map(FabcParams const& raw) {
    FabcParams const p = reduced(raw);
    require_nondegenerate(p);
    return ProjectiveMap<Rational>::create(
        inverse_forms(3, QPoly::constant(3, p.a), QPoly::constant(3, p.b), QPoly::constant(3, p.c)));
}

ProjectiveMap<Rational> inverse_map_symbolic() {
    std::size_t const n = fabc_symbolic_vars;
    return ProjectiveMap<Rational>::create(
        inverse_forms(n, QPoly::variable(n, 3), QPoly::variable(n, 4), QPoly::variable(n, 5)), 3);
}

std::vector<ProjectivePoint<Rational>> indeterminacy_points(FabcParams const& raw) {
    FabcParams const p = reduced(raw);
    require_nondegenerate(p);
    auto const forms = concrete_forms(p);
    auto const f = build_map(p);
    // F1 - F0 = aZ^2 is a monomial, so common zeros lie on coordinate lines.
    QPoly const diff = forms[1] - forms[0];
    if (diff.size() != 1) throw std::logic_error("unexpected shape of f_{a,b,c}");
    std::vector<ProjectivePoint<Rational>> out;
    for (std::size_t var = 0; var < 3; ++var) {
        if (diff.terms().front().mono[var] == 0) continue;
        std::vector<QPoly> restricted;
        for (auto const& form : forms) {
            QPoly r = form.evaluate_var(var, Rational(0));
            if (!r.is_zero()) restricted.push_back(std::move(r));
        }
        if (restricted.empty()) throw std::logic_error("f_{a,b,c} vanishes on a whole line");
        QPoly const g = gcd(std::span<QPoly const>(restricted));
        std::size_t const u = var == 0 ? 1 : 0;
        std::size_t const v = var == 2 ? 1 : 2;
        for (auto const& [x, y] : binary_form_zeros(g, u)) {
            std::vector<Rational> coords(3, Rational(0));
            coords[u] = x;
            coords[v] = y;
            ProjectivePoint<Rational> pt(std::move(coords));
            if (!apply(f, pt) && std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(std::move(pt));
        }
    }
    std::sort(out.begin(), out.end(), [](auto const& l, auto const& r) {
        return std::lexicographical_compare(l.coords().begin(), l.coords().end(), r.coords().begin(), r.coords().end());
    });
    return out;
}

QPoly critical_locus(FabcParams const& raw) {
    FabcParams const p = reduced(raw);
    require_nondegenerate(p);
    auto const forms = concrete_forms(p);
    return jacobian_det(std::span<QPoly const>(forms), 3);
}

QPoly critical_locus_symbolic() {
    auto const forms = symbolic_forms();
    return jacobian_det(std::span<QPoly const>(forms), 3);
}

Preimage preimage(FabcParams const& raw, ProjectivePoint<Rational> const& q) {
    FabcParams const p = reduced(raw);
    require_nondegenerate(p);
    if (q.size() != 3) throw ArityMismatch("f_{a,b,c} acts on P^2");
    Rational const &alpha = q[0], &beta = q[1], &gamma = q[2];
    auto const &a = p.a, &b = p.b, &c = p.c;
    Preimage out;
    auto point = [&](Rational x, Rational y, Rational z) {
        out.kind = Preimage::Kind::Point;
        out.point = ProjectivePoint<Rational>({std::move(x), std::move(y), std::move(z)});
    };
    if (sgn(alpha) == 0) {
        if (sgn(beta) == 0) {
            out.description = "[0,0,1] has no preimage";
            return out;
        }
        Rational const det = a * gamma - c * beta;
        if (sgn(det) == 0) {
            out.kind = Preimage::Kind::LineMinusPoints;
            out.line = QPoly::variable(3, 1);
            out.removed.push_back(ProjectivePoint<Rational>({1, 0, 0}));
            out.description = "{Y=0} minus [1,0,0]";
            return out;
        }
        point(0, det, b * beta);
        out.description = "single point on X=0";
        return out;
    }
    if (alpha == beta) {
        if (sgn(gamma) == 0) {
            out.kind = Preimage::Kind::LineMinusPoints;
            out.line = QPoly::variable(3, 2);
            out.removed.push_back(ProjectivePoint<Rational>({0, 1, 0}));
            out.removed.push_back(ProjectivePoint<Rational>({1, 0, 0}));
            out.description = "{Z=0} minus [0,1,0], [1,0,0]";
        } else {
            out.description = "X = Y forces Z = 0, so the third coordinate must vanish";
        }
        return out;
    }
    Rational const s = alpha * c - beta * c + gamma * a;
    if (sgn(s) == 0) {
        out.description = "point of the form [a, at, ct - c] has no preimage";
        return out;
    }
    Rational const d = alpha - beta;
    point(-alpha * d * a * b * b, s * s, -d * s * b);
    out.description = "single point";
    return out;
}

std::vector<Rational> vn_sequence(FabcParams const& raw, std::size_t n_max) {
    FabcParams const p = reduced(raw);
    require_nondegenerate(p);
    return recurrence<Rational>(p.a * p.b, p.c, Rational(1), n_max);
}

std::vector<Zp> vn_sequence_mod_p(Integer const& a, Integer const& b, Integer const& c, std::uint64_t p,
                                  std::size_t n_max) {
    Zp const ra = Zp::from_integer(a, p), rb = Zp::from_integer(b, p), rc = Zp::from_integer(c, p);
    if (ra.is_zero() || rb.is_zero() || rc.is_zero()) throw DegenerateParameters("p divides abc");
    return recurrence<Zp>(ra * rb, rc, Zp(1, p), n_max);
}

char const* to_string(StabilityVerdict::Status s) {
    switch (s) {
        case StabilityVerdict::Status::Stable: return "stable";
        case StabilityVerdict::Status::Unstable: return "unstable";
        case StabilityVerdict::Status::Degenerate: return "degenerate";
    }
    return "unknown";
}

StabilityVerdict classify(FabcParams const& raw) {
    FabcParams const p = reduced(raw);
    StabilityVerdict out;
    std::string zeros;
    if (sgn(p.a) == 0) zeros += "a";
    if (sgn(p.b) == 0) zeros += zeros.empty() ? "b" : ", b";
    if (sgn(p.c) == 0) zeros += zeros.empty() ? "c" : ", c";
    if (!zeros.empty()) {
        out.status = StabilityVerdict::Status::Degenerate;
        out.reason = zeros + " = 0";
        return out;
    }
    auto const order = unstable_order(p.c * p.c / (p.a * p.b));
    if (!order) return out;
    std::size_t const m = *order - 1;
    auto const v = vn_sequence(p, m);
    for (std::size_t k = 1; k < m; ++k) {
        if (sgn(v[k]) == 0) throw std::logic_error("V_n vanished before the predicted index");
    }
    if (sgn(v[m]) != 0) throw std::logic_error("predicted V_m = 0 does not hold");
    out.status = StabilityVerdict::Status::Unstable;
    out.zeta_order = order;
    out.vanishing_index = m;
    return out;
}

ModPResult classify_mod_p(Integer const& a, Integer const& b, Integer const& c, std::uint64_t p,
                          std::uint64_t search_cap) {
    if (!is_probable_prime(p)) throw std::invalid_argument("modulus must be prime");
    if (p >= Zp::max_modulus) throw std::invalid_argument("modulus too large");
    ModPResult out;
    out.p = p;
    Zp const ra = Zp::from_integer(a, p), rb = Zp::from_integer(b, p), rc = Zp::from_integer(c, p);
    if (ra.is_zero() || rb.is_zero() || rc.is_zero()) {
        out.kind = ModPResult::Kind::DegenerateModP;
        return out;
    }
    if (search_cap == 0) {
        unsigned __int128 const sq = static_cast<unsigned __int128>(p) * p;
        search_cap = sq > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(sq);
    }
    Zp const ab = ra * rb;
    Zp prev(1, p), cur = rc;
    for (std::uint64_t m = 1; m <= search_cap; ++m) {
        if (cur.is_zero()) {
            out.kind = ModPResult::Kind::ExceptionalAt;
            out.m = m;
            return out;
        }
        Zp next = rc * cur + ab * prev;
        prev = cur;
        cur = next;
        // (V_m, V_{m+1}) back at (V_0, V_1): the sequence is periodic and
        // never vanishes.
        if (prev.value() == 1 && cur == rc) break;
    }
    out.kind = ModPResult::Kind::NotFoundWithinCap;
    return out;
}

FamilyParams parse_family(std::string const& a, std::string const& b, std::string const& c) {
    std::vector<std::string> const names{"T"};
    return {parse_poly(a, names), parse_poly(b, names), parse_poly(c, names)};
}

std::string format_family_poly(QPoly const& p) {
    std::vector<std::string> const names{"T"};
    return format_poly(p, names);
}

GenericStability family_generic_stability(FamilyParams const& f) {
    GenericStability out;
    if (family_var_poly(f.a).is_zero() || family_var_poly(f.b).is_zero() || family_var_poly(f.c).is_zero()) {
        out.kind = GenericStability::Kind::Degenerate;
        return out;
    }
    QPoly const num = f.c * f.c, den = f.a * f.b;
    Rational const kappa = num.leading_coeff() / den.leading_coeff();
    if (!(num == den * kappa)) return out;
    out.kappa = kappa;
    if (auto order = unstable_order(kappa)) {
        out.kind = GenericStability::Kind::GenericallyUnstable;
        out.zeta_order = order;
    }
    return out;
}

ExceptionalLocus family_exceptional_locus(FamilyParams const& f, std::size_t n_max) {
    if (n_max < 3) throw std::invalid_argument("exceptional locus needs n_max >= 3");
    if (family_generic_stability(f).kind == GenericStability::Kind::Degenerate) {
        throw DegenerateParameters("family polynomials must be nonzero");
    }
    QPoly const ab = f.a * f.b;
    QPoly const u = -(QPoly::constant(1, Rational(2)) * ab + f.c * f.c);  // numerator of w = u / ab
    ZPoly const abc = primitive_integer(ab * f.c);
    QPoly const zeta_one = f.c * f.c + QPoly::constant(1, Rational(4)) * ab;

    ExceptionalLocus out;
    out.truncation = n_max;
    out.zeta_one_locus = primitive_integer(zeta_one);
    if (!abc.is_constant()) {
        auto const sq = squarefree_part(to_rational_poly(abc));
        out.degenerate_params = polynomial_roots(univariate_coeffs(sq));
    }

    for (std::size_t n = 3; n <= n_max; ++n) {
        ZPoly const psi = cos_min_poly(n);
        std::uint64_t const d = *psi.degree();
        std::vector<QPoly> u_pow{QPoly::constant(1, Rational(1))}, ab_pow{QPoly::constant(1, Rational(1))};
        for (std::uint64_t k = 1; k <= d; ++k) {
            u_pow.push_back(u_pow.back() * u);
            ab_pow.push_back(ab_pow.back() * ab);
        }
        QPoly num(1);
        for (std::uint64_t k = 0; k <= d; ++k) {
            Integer const ck = psi.coeff_of(Monomial::variable(0, static_cast<std::uint32_t>(k)));
            if (ck != 0) num += u_pow[k] * ab_pow[d - k] * Rational(ck);
        }
        if (num.is_zero()) throw std::domain_error("family is generically unstable: Psi_" + std::to_string(n) + " vanishes identically");

        ZPoly pn = primitive_integer(num);
        for (ZPoly const& strip : {abc, out.zeta_one_locus}) {
            if (strip.is_zero() || strip.is_constant()) continue;
            while (true) {
                ZPoly const g = primitive_part(gcd(pn, strip));
                if (g.is_constant()) break;
                pn = *divide_exact(pn, g);
            }
        }
        pn = primitive_part(pn);

        LocusEntry entry;
        entry.n = n;
        entry.poly = pn;
        if (!pn.is_constant()) {
            QPoly const sq = squarefree_part(to_rational_poly(pn));
            auto const coeffs = univariate_coeffs(sq);
            entry.roots = polynomial_roots(coeffs);
            double log_mahler = std::log(std::abs(coeffs.back().get_d()));
            for (auto const& r : entry.roots) log_mahler += std::log(std::max(1.0, std::abs(r)));
            double const h = log_mahler / static_cast<double>(entry.roots.size());
            entry.heights.assign(entry.roots.size(), h);
        }
        out.entries.push_back(std::move(entry));
    }
    return out;
}

double locus_residual(FamilyParams const& f, std::size_t n, std::complex<double> t) {
    std::complex<double> const w = -2.0 - std::pow(eval_complex(f.c, t), 2) / (eval_complex(f.a, t) * eval_complex(f.b, t));
    ZPoly const psi = cos_min_poly(n);
    std::complex<double> acc = 0;
    double scale = 0;
    for (std::uint64_t k = *psi.degree() + 1; k-- > 0;) {
        double const ck = psi.coeff_of(Monomial::variable(0, static_cast<std::uint32_t>(k))).get_d();
        acc = acc * w + ck;
        scale = scale * std::abs(w) + std::abs(ck);
    }
    return std::abs(acc) / std::max(scale, 1.0);
}

IntersectionReport unlikely_intersection_explorer(FamilyParams const& f1, FamilyParams const& f2,
                                                  std::size_t n_max) {
    auto const l1 = family_exceptional_locus(f1, n_max);
    auto const l2 = family_exceptional_locus(f2, n_max);
    // Distinct orders give coprime p_n within one family (Psi_n are distinct
    // irreducibles and shared roots with abc were removed), so root counts add.
    auto squarefree = [](ExceptionalLocus const& l) {
        std::vector<QPoly> out;
        for (auto const& e : l.entries) {
            out.push_back(e.poly.is_constant() ? to_rational_poly(e.poly) : squarefree_part(to_rational_poly(e.poly)));
        }
        return out;
    };
    auto const s1 = squarefree(l1), s2 = squarefree(l2);

    IntersectionReport out;
    out.truncation = n_max;
    for (auto const& p : s1) out.size1 += *p.degree();
    for (auto const& p : s2) out.size2 += *p.degree();
    for (std::size_t i = 0; i < s1.size(); ++i) {
        for (std::size_t j = 0; j < s2.size(); ++j) {
            if (s1[i].is_constant() || s2[j].is_constant()) continue;
            QPoly const g = gcd(s1[i], s2[j]);
            if (g.is_constant()) continue;
            out.intersection += *g.degree();
            out.pairs.push_back({l1.entries[i].n, l2.entries[j].n, primitive_integer(g)});
        }
    }
    out.symmetric_difference = out.size1 + out.size2 - 2 * out.intersection;
    out.phi_equal = f1.c * f1.c * f2.a * f2.b == f2.c * f2.c * f1.a * f1.b;
    return out;
}

Rational psi_map(Rational const& z) {
    if (sgn(z) == 0) throw std::domain_error("psi is undefined at 0");
    Rational const s = z + 1;
    return -(s * s) / z;
}

}  // namespace dyndeg
