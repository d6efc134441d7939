#include "verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dyndeg/cyclo.hpp"
#include "dyndeg/fabc.hpp"
#include "dyndeg/gfam.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/ratmap.hpp"

namespace dyndeg::cli {

namespace {

std::string matrix_text(IntMatrix const& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < a[i].size(); ++j) s += (j ? "," : "") + a[i][j].get_str();
        s += "]";
    }
    return s + "]";
}

class Recorder {
public:
    explicit Recorder(SuiteResult& r) : r_(r) {}

    void check(bool ok, std::size_t instance, std::string const& what, std::string const& detail = {}) {
        ++r_.checks;
        if (!ok) r_.failures.push_back({instance, what, detail});
    }

private:
    SuiteResult& r_;
};

SuiteResult fabc_grid(SuiteConfig const&) {
    SuiteResult r{"fabc-grid", 0, 0, {}};
    Recorder rec(r);
    std::size_t instance = 0;
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            for (int c = -3; c <= 3; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                FabcParams const p{a, b, c};
                std::string const id = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
                if (a == 0 || b == 0 || c == 0) {
                    rec.check(classify(p).status == StabilityVerdict::Status::Degenerate, instance,
                              "zero parameter is degenerate", id);
                    ++instance;
                    continue;
                }
                auto const verdict = classify(p);
                auto const v = vn_sequence(p, 200);
                std::optional<std::size_t> first_zero;
                for (std::size_t n = 1; n < v.size() && !first_zero; ++n) {
                    if (sgn(v[n]) == 0) first_zero = n;
                }
                bool const unstable = verdict.status == StabilityVerdict::Status::Unstable;
                if (unstable) {
                    rec.check(first_zero && *first_zero <= 24 && *first_zero == verdict.vanishing_index, instance,
                              "classifier vs recurrence", id);
                } else {
                    rec.check(!first_zero, instance, "stable parameters keep V_n != 0 up to 200", id);
                }
                if (std::abs(a) <= 2 && std::abs(b) <= 2 && std::abs(c) <= 2) {
                    auto const report = is_algebraically_stable_up_to(build_map(p), 6);
                    rec.check(!report.truncated && unstable == report.drop_at.has_value(), instance,
                              "classifier vs degree sequence", id);
                }
                ++instance;
            }
        }
    }
    r.instances = instance;
    return r;
}

SuiteResult monomial_suite(SuiteConfig const& config) {
    SuiteResult r{"monomial", config.count, 0, {}};
    Recorder rec(r);
    double const tol = std::min(config.tolerance, 1e-6);
    for (std::size_t i = 0; i < config.count; ++i) {
        std::mt19937_64 rng(instance_seed(config.seed, i));
        std::size_t const n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        MonomialMap const m(random_nonsingular_matrix(rng, n, -9, 9));
        std::string const id = matrix_text(m.matrix());
        try {
            rec.check(verify_norm_equivalence(m), i, "norm equivalence", id);
            auto const k = find_k_contraction(m, tol);
            rec.check(k < n, i, "contraction index in [0, N-1]", id);
            auto const c4 = conjecture4_check(m, tol);
            rec.check(c4.holds, i, "conjecture 4 bound", id);
            auto const lambda = spectral_radius(m, tol);
            auto const cp = char_poly(m.matrix());
            double binom = 1;
            for (std::size_t j = 0; j <= n; ++j) {
                double const bound = binom * std::pow(lambda.value * (1 + 2 * tol), static_cast<double>(j));
                rec.check(std::abs(cp[j].get_d()) <= bound * (1 + 1e-12), i, "elementary symmetric bound", id);
                binom = binom * static_cast<double>(n - j) / static_cast<double>(j + 1);
            }
            rec.check(lambda.upper >= std::pow(std::abs(m.det().get_d()), 1.0 / static_cast<double>(n)) * (1 - 1e-12),
                      i, "lambda >= |det|^(1/N)", id);
            if (n <= 3) {
                rec.check(Integer(static_cast<unsigned long>(homogenize(m).degree())) == degree_D(m), i,
                          "D(A) equals the degree of the homogenized map", id);
            }
        } catch (std::exception const& e) {
            rec.check(false, i, "exception", id + ": " + e.what());
        }
    }
    std::size_t const unimodular = std::max<std::size_t>(config.count / 2, 1);
    for (std::size_t i = 0; i < unimodular; ++i) {
        std::size_t const idx = config.count + i;
        std::mt19937_64 rng(instance_seed(config.seed, idx));
        std::size_t const n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
        MonomialMap const m(random_unimodular_matrix(rng, n, 12));
        rec.check(inverse_degree_bound_check(m), idx, "inverse degree bound", matrix_text(m.matrix()));
    }
    r.instances = config.count + unimodular;
    return r;
}

SuiteResult gfam_suite(SuiteConfig const&) {
    SuiteResult r{"gfam", 0, 0, {}};
    Recorder rec(r);
    std::size_t instance = 0;
    for (int a = -2; a <= 2; ++a) {
        if (a == 0) continue;
        for (int b = -2; b <= 2; ++b) {
            GFamilyParams const p{a, b};
            std::string const id = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
            auto const e = exceptional_set(p, 12);
            // t outside the first 13 values keeps the orbit alive long enough.
            Rational const t(1000003, 7);
            auto const orbit = orbit_marked_point(p, t, 12);
            bool agree = orbit.first_coords.size() == 13;
            for (std::size_t n = 0; agree && n <= 12; ++n) agree = orbit.first_coords[n] == e[n];
            rec.check(agree, instance, "orbit of [1,0,1] matches e_n", id);
            for (std::size_t n = 0; n + 1 < e.size(); ++n) {
                rec.check(e[n + 1] == p.a * e[n] + p.b, instance, "recurrence e_{n+1} = a e_n + b", id);
            }
            for (std::size_t n = 0; n <= 6; ++n) {
                auto const hit = orbit_marked_point(p, e[n], 12);
                auto const idx = exceptional_index(p, e[n]);
                rec.check(hit.hit_at.has_value() && idx.has_value() && *hit.hit_at == *idx && e[*idx] == e[n],
                          instance, "hitting time matches exact membership", id + " n=" + std::to_string(n));
            }
            ++instance;
        }
    }
    r.instances = instance;
    return r;
}

SuiteResult cyclo_suite(SuiteConfig const&) {
    SuiteResult r{"cyclo", 0, 0, {}};
    Recorder rec(r);
    for (std::size_t n = 1; n <= 100; ++n) {
        ZPoly prod = ZPoly::constant(1, Integer(1));
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d == 0) prod *= cyclotomic(d);
        }
        ZPoly const target = ZPoly::term(1, Monomial::variable(0, static_cast<std::uint32_t>(n)), Integer(1)) -
                             ZPoly::constant(1, Integer(1));
        rec.check(prod == target, n, "product of Phi_d over d | n is x^n - 1", std::to_string(n));
        if (n <= 60) {
            rec.check(is_root_of_unity(to_rational_poly(cyclotomic(n))) == n, n, "root-of-unity order", std::to_string(n));
        }
        if (n <= 50) {
            ZPoly const psi = cos_min_poly(n);
            bool const linear = *psi.degree() == 1;
            bool const expect_linear = n == 1 || n == 2 || n == 3 || n == 4 || n == 6;
            rec.check(linear == expect_linear, n, "degree of Psi_n", std::to_string(n));
        }
    }
    r.instances = 100;
    return r;
}

using SuiteFn = std::function<SuiteResult(SuiteConfig const&)>;

std::map<std::string, SuiteFn> const& registry() {
    static std::map<std::string, SuiteFn> const suites{
        {"cyclo", cyclo_suite},
        {"fabc-grid", fabc_grid},
        {"gfam", gfam_suite},
        {"monomial", monomial_suite},
    };
    return suites;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::size_t instance) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(instance), static_cast<std::uint32_t>(instance >> 32U)};
    std::uint64_t out[1];
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    out[0] = (static_cast<std::uint64_t>(words[0]) << 32U) | words[1];
    return out[0];
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (auto const& [name, fn] : registry()) names.push_back(name);
    return names;
}

SuiteResult run_suite(std::string const& name, SuiteConfig const& config) {
    auto const& suites = registry();
    auto const it = suites.find(name);
    if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second(config);
}

}  // namespace dyndeg::cli
