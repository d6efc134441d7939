#include "dyndeg/ratmap.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "dyndeg/jacobian.hpp"
#include "dyndeg/poly_gcd.hpp"

namespace dyndeg {

namespace {

void joint_scale(std::vector<QPoly>& coords) {
    Integer lcm = 1;
    for (auto const& c : coords) {
        for (auto const& t : c.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Integer content = 0;
    for (auto const& c : coords) {
        for (auto const& t : c.terms()) {
            Integer const scaled = lcm / t.coeff.get_den() * t.coeff.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        }
    }
    Rational factor(lcm, content);
    factor.canonicalize();
    for (auto const& c : coords) {
        if (c.is_zero()) continue;
        if (sgn(c.leading_coeff()) < 0) factor = -factor;
        break;
    }
    if (factor == 1) return;
    for (auto& c : coords) c *= factor;
}

void joint_scale(std::vector<FpPoly>& coords) {
    for (auto const& c : coords) {
        if (c.is_zero()) continue;
        Zp const inv = c.leading_coeff().inverse();
        if (inv.value() == 1) return;
        for (auto& d : coords) d *= inv;
        return;
    }
}

template <class C>
ProjectivePoint<C> raw_point(std::vector<C> coords) {
    return ProjectivePoint<C>(std::move(coords));
}

}  // namespace

// --- points -------------------------------------------------------------------------

template <class C>
ProjectivePoint<C>::ProjectivePoint(std::vector<C> coords) : coords_(std::move(coords)) {
    for (auto& x : coords_) coeff_traits<C>::canonicalize(x);
    for (auto const& x : coords_) {
        if (coeff_traits<C>::is_zero(x)) continue;
        if (!coeff_traits<C>::is_one(x)) {
            C const scale = x;
            for (auto& y : coords_) y /= scale;
        }
        return;
    }
    throw std::invalid_argument("projective point with all coordinates zero");
}

// --- maps -----------------------------------------------------------------------------

template <class C>
ProjectiveMap<C> ProjectiveMap<C>::create(std::vector<poly_type> coords, std::size_t num_params) {
    if (coords.size() < 2) throw InvalidMap("a projective map needs at least two coordinates");
    std::size_t const n = coords.size() + num_params;
    if (n > max_vars) throw InvalidMap("too many variables for a projective map");
    std::optional<std::uint64_t> degree;
    bool all_zero = true;
    for (auto const& c : coords) {
        if (c.num_vars() != n) throw ArityMismatch("coordinate form lives in the wrong ring");
        if (!(c.ctx() == coords.front().ctx())) throw DomainMismatch("coordinates over different fields");
        if (c.is_zero()) continue;
        all_zero = false;
        if (!c.is_homogeneous(coords.size())) throw InvalidMap("coordinate form is not homogeneous");
        auto const d = c.partial_degree(coords.size());
        if (degree && *degree != d) throw InvalidMap("coordinate forms have different degrees");
        degree = d;
    }
    if (all_zero) throw InvalidMap("every coordinate form is zero");

    auto const g = gcd(std::span<poly_type const>(coords));
    if (!g.is_constant()) {
        for (auto& c : coords) {
            if (!c.is_zero()) c = *divide_exact(c, g);
        }
    }
    joint_scale(coords);

    ProjectiveMap m;
    m.num_params_ = num_params;
    for (auto const& c : coords) {
        if (!c.is_zero()) {
            m.degree_ = c.partial_degree(coords.size());
            break;
        }
    }
    m.coords_ = std::move(coords);
    return m;
}

template <class C>
ProjectiveMap<C> ProjectiveMap<C>::identity(std::size_t dimension, std::size_t num_params,
                                            typename poly_type::context ctx) {
    std::size_t const n = dimension + 1 + num_params;
    std::vector<poly_type> coords;
    for (std::size_t i = 0; i <= dimension; ++i) coords.push_back(poly_type::variable(n, i, ctx));
    return create(std::move(coords), num_params);
}

template <class C>
std::size_t ProjectiveMap<C>::max_terms() const noexcept {
    std::size_t m = 0;
    for (auto const& c : coords_) m = std::max(m, c.size());
    return m;
}

template <class C>
ProjectiveMap<C> compose(ProjectiveMap<C> const& f, ProjectiveMap<C> const& g) {
    if (f.coord_vars() != g.coord_vars() || f.num_params() != g.num_params()) {
        throw ArityMismatch("composing maps of different dimensions");
    }
    std::size_t const n = f.num_vars();
    std::vector<MultiPoly<C>> assignment(g.coords().begin(), g.coords().end());
    auto const ctx = f.coords().front().ctx();
    for (std::size_t j = f.coord_vars(); j < n; ++j) assignment.push_back(MultiPoly<C>::variable(n, j, ctx));
    std::vector<MultiPoly<C>> out;
    out.reserve(f.coord_vars());
    for (auto const& c : f.coords()) out.push_back(c.substitute(assignment));
    return ProjectiveMap<C>::create(std::move(out), f.num_params());
}

template <class C>
ProjectiveMap<C> iterate(ProjectiveMap<C> const& f, std::size_t n) {
    if (n == 0) throw std::invalid_argument("iterate needs n >= 1");
    ProjectiveMap<C> cur = f;
    for (std::size_t k = 1; k < n; ++k) cur = compose(f, cur);
    return cur;
}

std::size_t IterationLimits::default_max_terms() {
    if (char const* env = std::getenv("DYNDEG_MAX_TERMS")) {
        char* end = nullptr;
        unsigned long long const v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 200000;
}

template <class C>
DegreeSequence degree_sequence(ProjectiveMap<C> const& f, std::size_t n_max, IterationLimits limits) {
    if (n_max == 0) throw std::invalid_argument("degree_sequence needs n_max >= 1");
    DegreeSequence seq;
    seq.n_max = n_max;
    ProjectiveMap<C> cur = f;
    seq.degrees.push_back(cur.degree());
    while (seq.degrees.size() < n_max) {
        if (cur.max_terms() > limits.max_terms) {
            seq.truncated = true;
            break;
        }
        cur = compose(f, cur);
        seq.degrees.push_back(cur.degree());
    }
    return seq;
}

DynamicalDegreeEstimate dyndeg_estimate(DegreeSequence const& seq) {
    std::size_t const n = seq.computed();
    if (n < 2) throw std::invalid_argument("dynamical degree estimate needs two iterates");
    double const last = static_cast<double>(seq.degrees[n - 1]);
    double const prev = static_cast<double>(seq.degrees[n - 2]);
    return {std::pow(last, 1.0 / static_cast<double>(n)), last / prev};
}

template <class C>
StabilityReport is_algebraically_stable_up_to(ProjectiveMap<C> const& f, std::size_t n_max,
                                              IterationLimits limits) {
    if (n_max == 0) throw std::invalid_argument("stability check needs n_max >= 1");
    StabilityReport report;
    Integer expected = 1;
    ProjectiveMap<C> cur = f;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n > 1) {
            if (cur.max_terms() > limits.max_terms) {
                report.truncated = true;
                break;
            }
            cur = compose(f, cur);
        }
        expected *= static_cast<unsigned long>(f.degree());
        report.checked = n;
        if (Integer(static_cast<unsigned long>(cur.degree())) < expected) {
            report.drop_at = n;
            break;
        }
    }
    return report;
}

template <class C>
std::optional<ProjectivePoint<C>> apply_forms(std::span<MultiPoly<C> const> forms, ProjectivePoint<C> const& p) {
    std::vector<C> values;
    values.reserve(forms.size());
    bool all_zero = true;
    for (auto const& form : forms) {
        if (form.num_vars() != p.size()) throw ArityMismatch("point does not match the map's dimension");
        values.push_back(form.evaluate(p.coords()));
        if (!coeff_traits<C>::is_zero(values.back())) all_zero = false;
    }
    if (all_zero) return std::nullopt;
    return raw_point(std::move(values));
}

template <class C>
std::optional<ProjectivePoint<C>> apply(ProjectiveMap<C> const& f, ProjectivePoint<C> const& p) {
    if (f.num_params() != 0) throw std::invalid_argument("cannot evaluate a map with symbolic parameters");
    return apply_forms(f.coords(), p);
}

template <class C>
Orbit<C> orbit(ProjectiveMap<C> const& f, ProjectivePoint<C> const& p, std::size_t n_max) {
    Orbit<C> out;
    out.points.push_back(p);
    for (std::size_t step = 0;; ++step) {
        auto next = apply(f, out.points.back());
        if (!next) {
            out.hit_indeterminacy = out.points.size() - 1;
            break;
        }
        if (step == n_max) break;
        out.points.push_back(std::move(*next));
    }
    return out;
}

bool dominance_check(ProjectiveMap<Rational> const& f) {
    return !jacobian_det(f.coords(), f.coord_vars()).is_zero();
}

template class ProjectivePoint<Rational>;
template class ProjectivePoint<Zp>;
template class ProjectiveMap<Rational>;
template class ProjectiveMap<Zp>;

#define DYNDEG_INSTANTIATE(C)                                                                                   \
    template ProjectiveMap<C> compose(ProjectiveMap<C> const&, ProjectiveMap<C> const&);                       \
    template ProjectiveMap<C> iterate(ProjectiveMap<C> const&, std::size_t);                                    \
    template DegreeSequence degree_sequence(ProjectiveMap<C> const&, std::size_t, IterationLimits);             \
    template StabilityReport is_algebraically_stable_up_to(ProjectiveMap<C> const&, std::size_t,                \
                                                           IterationLimits);                                     \
    template std::optional<ProjectivePoint<C>> apply_forms(std::span<MultiPoly<C> const>,                      \
                                                           ProjectivePoint<C> const&);                           \
    template std::optional<ProjectivePoint<C>> apply(ProjectiveMap<C> const&, ProjectivePoint<C> const&);      \
    template Orbit<C> orbit(ProjectiveMap<C> const&, ProjectivePoint<C> const&, std::size_t);

DYNDEG_INSTANTIATE(Rational)
DYNDEG_INSTANTIATE(Zp)

#undef DYNDEG_INSTANTIATE

}  // namespace dyndeg
