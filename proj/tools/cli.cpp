#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyndeg/cyclo.hpp"
#include "dyndeg/fabc.hpp"
#include "dyndeg/gfam.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/poly_gcd.hpp"
#include "dyndeg/poly_text.hpp"
#include "dyndeg/ratmap.hpp"
#include "verify.hpp"

namespace dyndeg::cli {

namespace {

using json = nlohmann::ordered_json;

/// Rejected input that parsed syntactically.
class BadInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Rational parse_rational(std::string const& text, std::string const& what) {
    Rational q;
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    bool ok = !s.empty();
    for (char ch : s) ok = ok && (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/');
    if (!ok || q.set_str(s, 10) != 0 || q.get_den() == 0) throw BadInput(what + ": not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

Integer parse_integer(std::string const& text, std::string const& what) {
    Rational const q = parse_rational(text, what);
    if (q.get_den() != 1) throw BadInput(what + ": expected an integer, got '" + text + "'");
    return q.get_num();
}

std::string str(Rational const& q) { return q.get_str(); }
std::string str(Integer const& z) { return z.get_str(); }

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

template <class Opt>
json opt_json(Opt const& o) {
    return o ? json(*o) : json(nullptr);
}

json header(std::string const& command) { return json{{"schema", 1}, {"command", command}}; }

// --- output -------------------------------------------------------------------------

std::string scalar_text(json const& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void print_human(json const& doc, std::ostream& out) {
    for (auto const& [key, value] : doc.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << key << ":\n";
            std::vector<std::string> cols;
            for (auto const& [k, unused] : value.front().items()) cols.push_back(k);
            out << " ";
            for (auto const& c : cols) out << " " << c;
            out << "\n";
            for (auto const& row : value) {
                out << " ";
                for (auto const& c : cols) out << " " << (row.contains(c) ? scalar_text(row.at(c)) : "-");
                out << "\n";
            }
        } else if (value.is_object()) {
            out << key << ":\n";
            for (auto const& [k, v] : value.items()) out << "  " << k << ": " << scalar_text(v) << "\n";
        } else {
            out << key << ": " << scalar_text(value) << "\n";
        }
    }
}

// --- shared option plumbing -----------------------------------------------------------

struct Common {
    std::string format = "json";
};

void add_format(CLI::App* sub, Common& common) {
    sub->add_option("--format", common.format, "Output mode")->check(CLI::IsMember({"json", "human"}));
}

struct MapInput {
    std::string map_text;
    std::string map_file;
};

ProjectiveMap<Rational> read_map(MapInput const& in) {
    std::string text = in.map_text;
    if (!in.map_file.empty()) {
        std::ifstream f(in.map_file);
        if (!f) throw BadInput("cannot read map file '" + in.map_file + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    if (text.empty()) throw BadInput("a map is required (--map or --map-file)");
    json doc;
    try {
        doc = json::parse(text);
    } catch (json::exception const& e) {
        throw BadInput(std::string("map document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("N") || !doc.contains("coords") || !doc["N"].is_number_unsigned() ||
        !doc["coords"].is_array()) {
        throw BadInput(R"(map document must look like {"N":2,"coords":["...","...","..."]})");
    }
    auto const n = doc["N"].get<std::size_t>();
    if (n < 1 || n + 1 > max_vars) throw BadInput("N must be between 1 and " + std::to_string(max_vars - 1));
    if (doc["coords"].size() != n + 1) throw BadInput("expected N+1 coordinate forms");
    std::vector<std::string> names = default_variable_names(n + 1);
    if (doc.contains("vars")) {
        names = doc["vars"].get<std::vector<std::string>>();
        if (names.size() != n + 1) throw BadInput("expected N+1 variable names");
    }
    std::vector<QPoly> coords;
    for (auto const& c : doc["coords"]) {
        if (!c.is_string()) throw BadInput("coordinate forms must be strings");
        coords.push_back(parse_poly(c.get<std::string>(), names));
    }
    return ProjectiveMap<Rational>::create(std::move(coords));
}

struct FabcInput {
    std::string a, b, c;
};

void add_abc(CLI::App* sub, FabcInput& in) {
    sub->add_option("-a", in.a, "Parameter a")->required();
    sub->add_option("-b", in.b, "Parameter b")->required();
    sub->add_option("-c", in.c, "Parameter c")->required();
}

FabcParams fabc_params(FabcInput const& in) {
    return {parse_rational(in.a, "a"), parse_rational(in.b, "b"), parse_rational(in.c, "c")};
}

json degrees_json(DegreeSequence const& seq) {
    json d = json::array();
    for (auto x : seq.degrees) d.push_back(x);
    return d;
}

// --- commands -----------------------------------------------------------------------

int cmd_degseq(MapInput const& in, std::size_t n_max, std::size_t max_terms, json& doc) {
    auto const f = read_map(in);
    IterationLimits limits;
    if (max_terms) limits.max_terms = max_terms;
    auto const seq = degree_sequence(f, n_max, limits);
    std::optional<std::size_t> drop;
    Integer power = 1;
    for (std::size_t n = 1; n <= seq.computed() && !drop; ++n) {
        power *= static_cast<unsigned long>(f.degree());
        if (Integer(static_cast<unsigned long>(seq[n])) < power) drop = n;
    }
    doc["N"] = f.dimension();
    doc["degree"] = f.degree();
    doc["nmax"] = n_max;
    doc["degrees"] = degrees_json(seq);
    doc["computed"] = seq.computed();
    doc["truncated"] = seq.truncated;
    doc["max_terms"] = limits.max_terms;
    doc["drop_at"] = opt_json(drop);
    if (seq.computed() >= 2) {
        auto const est = dyndeg_estimate(seq);
        doc["dynamical_degree_estimate"] = json{{"root", est.root_estimate}, {"ratio", est.ratio_estimate}};
    }
    return seq.truncated ? exit_resource_cap : exit_ok;
}

int cmd_stability(MapInput const& in, FabcInput const& abc, std::size_t n_max, std::size_t max_terms, json& doc) {
    bool const have_abc = !abc.a.empty() || !abc.b.empty() || !abc.c.empty();
    if (have_abc && (abc.a.empty() || abc.b.empty() || abc.c.empty())) throw BadInput("give all of -a, -b, -c");
    if (have_abc == (!in.map_text.empty() || !in.map_file.empty())) {
        throw BadInput("give either a map (--map/--map-file) or -a -b -c");
    }
    auto const f = have_abc ? build_map(fabc_params(abc)) : read_map(in);
    IterationLimits limits;
    if (max_terms) limits.max_terms = max_terms;
    auto const report = is_algebraically_stable_up_to(f, n_max, limits);
    doc["degree"] = f.degree();
    doc["nmax"] = n_max;
    doc["checked"] = report.checked;
    doc["stable_so_far"] = report.stable_so_far();
    doc["drop_at"] = opt_json(report.drop_at);
    doc["truncated"] = report.truncated;
    if (have_abc) doc["classifier"] = to_string(classify(fabc_params(abc)).status);
    return report.truncated ? exit_resource_cap : exit_ok;
}

int cmd_fabc_classify(FabcInput const& in, json& doc) {
    auto const p = fabc_params(in);
    auto const v = classify(p);
    doc["a"] = str(p.a);
    doc["b"] = str(p.b);
    doc["c"] = str(p.c);
    doc["status"] = to_string(v.status);
    doc["zeta_order"] = opt_json(v.zeta_order);
    doc["vanishing_index"] = opt_json(v.vanishing_index);
    if (v.status != StabilityVerdict::Status::Degenerate) {
        Rational const kappa = p.c * p.c / (p.a * p.b);
        doc["c2_over_ab"] = str(kappa);
    } else {
        doc["reason"] = v.reason;
    }
    return exit_ok;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

char const* to_string(ModPResult::Kind k) {
    switch (k) {
        case ModPResult::Kind::ExceptionalAt: return "ExceptionalAt";
        case ModPResult::Kind::NotFoundWithinCap: return "NotFoundWithinCap";
        case ModPResult::Kind::DegenerateModP: return "DegenerateModP";
    }
    return "?";
}

int cmd_fabc_modp(FabcInput const& in, std::uint64_t p_single, std::uint64_t p_min, std::uint64_t p_max,
                  std::uint64_t cap, json& doc) {
    Integer const a = parse_integer(in.a, "a"), b = parse_integer(in.b, "b"), c = parse_integer(in.c, "c");
    if (a == 0 || b == 0 || c == 0) throw DegenerateParameters("a, b and c must be nonzero");
    if (p_single) {
        if (!is_prime(p_single)) throw BadInput("--p must be prime");
        p_min = p_max = p_single;
    }
    if (p_max >= (std::uint64_t{1} << 31)) throw BadInput("--pmax must be below 2^31");
    doc["a"] = str(a);
    doc["b"] = str(b);
    doc["c"] = str(c);
    doc["rational_status"] = to_string(classify(FabcParams{a, b, c}).status);
    json rows = json::array();
    for (std::uint64_t p = std::max<std::uint64_t>(p_min, 2); p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        auto const r = classify_mod_p(a, b, c, p, cap);
        rows.push_back(json{{"p", p}, {"kind", to_string(r.kind)}, {"m", opt_json(r.m)}});
    }
    doc["primes"] = rows;
    return exit_ok;
}

char const* to_string(GenericStability::Kind k) {
    switch (k) {
        case GenericStability::Kind::GenericallyStable: return "GenericallyStable";
        case GenericStability::Kind::GenericallyUnstable: return "GenericallyUnstable";
        case GenericStability::Kind::Degenerate: return "Degenerate";
    }
    return "?";
}

int cmd_fabc_locus(FabcInput const& in, std::size_t n_max, json& doc) {
    auto const fam = parse_family(in.a, in.b, in.c);
    auto const gen = family_generic_stability(fam);
    doc["a"] = format_family_poly(fam.a);
    doc["b"] = format_family_poly(fam.b);
    doc["c"] = format_family_poly(fam.c);
    doc["generic"] = to_string(gen.kind);
    if (gen.kind != GenericStability::Kind::GenericallyStable) {
        doc["kappa"] = gen.kappa ? json(str(*gen.kappa)) : json(nullptr);
        doc["zeta_order"] = opt_json(gen.zeta_order);
        return exit_ok;
    }
    auto const locus = family_exceptional_locus(fam, n_max);
    doc["truncation"] = locus.truncation;
    doc["zeta_one_locus"] = format_family_poly(to_rational_poly(locus.zeta_one_locus));
    json deg = json::array();
    for (auto z : locus.degenerate_params) deg.push_back(complex_json(z));
    doc["degenerate_params"] = deg;
    json entries = json::array();
    for (auto const& e : locus.entries) {
        json roots = json::array();
        for (auto z : e.roots) roots.push_back(complex_json(z));
        entries.push_back(json{{"n", e.n},
                               {"poly", format_family_poly(to_rational_poly(e.poly))},
                               {"roots", roots},
                               {"heights", e.heights}});
    }
    doc["entries"] = entries;
    return exit_ok;
}

int cmd_fabc_intersect(FabcInput const& f1, FabcInput const& f2, std::size_t n_max, json& doc) {
    auto const fam1 = parse_family(f1.a, f1.b, f1.c);
    auto const fam2 = parse_family(f2.a, f2.b, f2.c);
    auto const r = unlikely_intersection_explorer(fam1, fam2, n_max);
    doc["nmax"] = r.truncation;
    doc["size1"] = r.size1;
    doc["size2"] = r.size2;
    doc["intersection"] = r.intersection;
    doc["symmetric_difference"] = r.symmetric_difference;
    doc["phi_equal"] = r.phi_equal;
    json pairs = json::array();
    for (auto const& pr : r.pairs) {
        pairs.push_back(json{{"n1", pr.n1}, {"n2", pr.n2}, {"common", format_family_poly(to_rational_poly(pr.common))}});
    }
    doc["pairs"] = pairs;
    return exit_ok;
}

json integers_json(std::vector<Integer> const& v) {
    json arr = json::array();
    for (auto const& x : v) arr.push_back(str(x));
    return arr;
}

int cmd_gfam(std::string const& a_text, std::string const& b_text, std::size_t n_max, std::string const& t_text,
             bool report, json& doc) {
    if (report) {
        auto const r = negative_answer_report(n_max);
        doc["nmax"] = r.n_max;
        doc["e11"] = integers_json(r.e11);
        doc["e12"] = integers_json(r.e12);
        doc["e20"] = integers_json(r.e20);
        doc["intersection"] = integers_json(r.intersection);
        doc["symmetric_difference"] = integers_json(r.symmetric_difference);
        doc["e20_subset_of_e11"] = r.e20_subset_of_e11;
        return exit_ok;
    }
    if (a_text.empty() || b_text.empty()) throw BadInput("gfam needs -a and -b (or --report)");
    GFamilyParams const p{parse_rational(a_text, "a"), parse_rational(b_text, "b")};
    if (p.a == 0) throw DegenerateParameters("a must be nonzero");
    doc["a"] = str(p.a);
    doc["b"] = str(p.b);
    doc["nmax"] = n_max;
    json e = json::array();
    for (auto const& x : exceptional_set(p, n_max)) e.push_back(str(x));
    doc["exceptional_prefix"] = e;
    if (!t_text.empty()) {
        Rational const t = parse_rational(t_text, "t");
        auto const idx = exceptional_index(p, t);
        auto const orb = orbit_marked_point(p, t, n_max);
        doc["t"] = str(t);
        doc["exceptional_index"] = opt_json(idx);
        doc["orbit_hit_at"] = opt_json(orb.hit_at);
        doc["degenerate_map"] = orb.degenerate_map;
    }
    return exit_ok;
}

IntMatrix parse_matrix(std::string const& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (json::exception const& e) {
        throw BadInput(std::string("matrix is not valid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) throw BadInput("matrix must be a nonempty JSON array of rows");
    IntMatrix a;
    for (auto const& row : doc) {
        if (!row.is_array() || row.size() != doc.size()) throw BadInput("matrix must be square");
        std::vector<Integer> r;
        for (auto const& x : row) {
            if (x.is_number_integer()) {
                r.emplace_back(std::to_string(x.get<long long>()));
            } else if (x.is_string()) {
                r.push_back(parse_integer(x.get<std::string>(), "matrix entry"));
            } else {
                throw BadInput("matrix entries must be integers");
            }
        }
        a.push_back(std::move(r));
    }
    return a;
}

int cmd_monomial(std::string const& matrix_text, double tol, std::optional<double> epsilon, std::size_t m_cap,
                 json& doc) {
    if (!(tol > 0 && tol <= 1e-3)) throw BadInput("--tol must lie in (0, 1e-3]");
    MonomialMap const m(parse_matrix(matrix_text));
    auto const an = analyze(m, tol);
    doc["N"] = an.n;
    doc["det"] = str(m.det());
    doc["D"] = str(an.d);
    doc["sup_norm"] = str(an.norm);
    doc["char_poly"] = integers_json(an.char_poly);
    doc["spectral_radius"] = json{{"value", an.lambda.value}, {"lower", an.lambda.lower}, {"upper", an.lambda.upper}};
    doc["gamma_N"] = gamma_N(an.n);
    doc["norm_equivalence"] = an.lemma63;
    doc["contraction_k"] = an.prop64_k;
    doc["degree_growth_bound"] = json{{"holds", an.cor61.holds}, {"lambda", an.cor61.lhs}, {"bound", an.cor61.rhs}};
    doc["inverse_degree_bound"] = an.prop65 ? json(*an.prop65) : json(nullptr);
    if (epsilon) {
        auto const r = find_m_epsilon(m, *epsilon, tol, m_cap);
        doc["m_epsilon"] = json{{"epsilon", *epsilon}, {"target", r.target}, {"cap", r.cap}, {"m", opt_json(r.m)}};
        if (!r.m) return exit_resource_cap;
    }
    bool const ok = an.lemma63 && an.cor61.holds && an.prop65.value_or(true);
    return ok ? exit_ok : exit_verify_failed;
}

int cmd_verify(std::vector<std::string> const& suites, SuiteConfig const& config, json& doc) {
    doc["seed"] = config.seed;
    doc["count"] = config.count;
    doc["tolerance"] = config.tolerance;
    std::vector<std::string> names = suites;
    if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) names = suite_names();
    json results = json::array();
    bool all_ok = true;
    for (auto const& name : names) {
        auto const r = run_suite(name, config);
        all_ok = all_ok && r.passed();
        json failures = json::array();
        std::ostringstream repro;
        repro << "dyndeg verify --suite " << name << " --count " << config.count << " --seed " << config.seed;
        for (auto const& f : r.failures) {
            failures.push_back(json{{"instance", f.instance}, {"check", f.check}, {"detail", f.detail}});
        }
        results.push_back(json{{"suite", r.name},
                               {"instances", r.instances},
                               {"checks", r.checks},
                               {"failed", r.failures.size()},
                               {"passed", r.passed()},
                               {"reproduce", repro.str()}});
        if (!failures.empty()) doc["failures_" + name] = failures;
    }
    doc["suites"] = results;
    doc["passed"] = all_ok;
    return all_ok ? exit_ok : exit_verify_failed;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree growth, algebraic stability and dynamical degrees of rational maps", "dyndeg"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "dyndeg 0.1.0");

    Common common;
    MapInput map_in;
    FabcInput abc, abc2;
    std::size_t n_max = 0;
    std::size_t max_terms = 0;
    std::uint64_t p_single = 0, p_min = 2, p_max = 100, cap = 0;
    std::string ga, gb, gt;
    bool report = false;
    std::string matrix;
    double tol = 1e-9;
    std::optional<double> epsilon;
    std::size_t m_cap = 64;
    std::vector<std::string> suites;
    SuiteConfig suite_config;

    auto add_map = [&](CLI::App* sub) {
        sub->add_option("--map", map_in.map_text, "Map as JSON: {\"N\":2,\"coords\":[...]}");
        sub->add_option("--map-file", map_in.map_file, "File holding the map JSON");
        sub->add_option("--max-terms", max_terms, "Term cap per iterate coordinate (also DYNDEG_MAX_TERMS)");
    };

    auto* degseq = app.add_subcommand("degseq", "Degrees of f^n for n = 1..nmax");
    add_map(degseq);
    degseq->add_option("--nmax", n_max, "Largest iterate (default 5)");
    add_format(degseq, common);

    auto* stability = app.add_subcommand("stability", "Look for a degree drop up to nmax");
    add_map(stability);
    stability->add_option("-a", abc.a, "f_{a,b,c} parameter a");
    stability->add_option("-b", abc.b, "f_{a,b,c} parameter b");
    stability->add_option("-c", abc.c, "f_{a,b,c} parameter c");
    stability->add_option("--nmax", n_max, "Largest iterate (default 5)");
    add_format(stability, common);

    auto* classify_cmd = app.add_subcommand("fabc-classify", "Stability of f_{a,b,c} over Q");
    add_abc(classify_cmd, abc);
    add_format(classify_cmd, common);

    auto* modp = app.add_subcommand("fabc-modp", "Least m with V_m = 0 mod p, per prime");
    add_abc(modp, abc);
    modp->add_option("--p", p_single, "A single prime");
    modp->add_option("--pmin", p_min, "Smallest prime scanned (default 2)");
    modp->add_option("--pmax", p_max, "Largest prime scanned (default 100)");
    modp->add_option("--search-cap", cap, "Largest m examined (default p^2)");
    add_format(modp, common);

    auto* locus = app.add_subcommand("fabc-locus", "Exceptional parameters of a family (a(T), b(T), c(T))");
    locus->add_option("-a", abc.a, "a(T)")->required();
    locus->add_option("-b", abc.b, "b(T)")->required();
    locus->add_option("-c", abc.c, "c(T)")->required();
    locus->add_option("--nmax", n_max, "Largest root-of-unity order (default 30)");
    add_format(locus, common);

    auto* inter = app.add_subcommand("fabc-intersect", "Compare the exceptional loci of two families");
    inter->add_option("--a1", abc.a, "a1(T)")->required();
    inter->add_option("--b1", abc.b, "b1(T)")->required();
    inter->add_option("--c1", abc.c, "c1(T)")->required();
    inter->add_option("--a2", abc2.a, "a2(T)")->required();
    inter->add_option("--b2", abc2.b, "b2(T)")->required();
    inter->add_option("--c2", abc2.c, "c2(T)")->required();
    inter->add_option("--nmax", n_max, "Largest root-of-unity order (default 30)");
    add_format(inter, common);

    auto* gfam = app.add_subcommand("gfam", "Exceptional set of g_{a,b,T}");
    gfam->add_option("-a", ga, "Parameter a");
    gfam->add_option("-b", gb, "Parameter b");
    gfam->add_option("--t", gt, "Test one parameter value");
    gfam->add_option("--nmax", n_max, "Number of terms (default 10)");
    gfam->add_flag("--report", report, "Compare E(g_{1,1,T}), E(g_{1,2,T}), E(g_{2,0,T})");
    add_format(gfam, common);

    auto* mono = app.add_subcommand("monomial", "Degree data of a monomial map");
    mono->add_option("--matrix", matrix, "Integer matrix as JSON rows")->required();
    mono->add_option("--tol", tol, "Relative tolerance of the spectral radius (default 1e-9)");
    mono->add_option("--epsilon", epsilon, "Also find the least m for this epsilon");
    mono->add_option("--m-cap", m_cap, "Largest m scanned (default 64)");
    add_format(mono, common);

    auto* verify = app.add_subcommand("verify", "Seeded property suites");
    verify->add_option("--suite", suites, "Suite name or 'all'");
    verify->add_option("--count", suite_config.count, "Random instances (default 1000)");
    verify->add_option("--seed", suite_config.seed, "Seed (default 42)");
    verify->add_option("--tol", suite_config.tolerance, "Tolerance (default 1e-9)");
    add_format(verify, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForVersion const& e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
        app.exit(e, err, err);
        err << app.help();
        return exit_bad_input;
    }

    CLI::App* sub = app.get_subcommands().front();
    json doc = header(sub->get_name());
    int code = exit_ok;
    try {
        if (sub == degseq) {
            code = cmd_degseq(map_in, n_max ? n_max : 5, max_terms, doc);
        } else if (sub == stability) {
            code = cmd_stability(map_in, abc, n_max ? n_max : 5, max_terms, doc);
        } else if (sub == classify_cmd) {
            code = cmd_fabc_classify(abc, doc);
        } else if (sub == modp) {
            code = cmd_fabc_modp(abc, p_single, p_min, p_max, cap, doc);
        } else if (sub == locus) {
            code = cmd_fabc_locus(abc, n_max ? n_max : 30, doc);
        } else if (sub == inter) {
            code = cmd_fabc_intersect(abc, abc2, n_max ? n_max : 30, doc);
        } else if (sub == gfam) {
            code = cmd_gfam(ga, gb, n_max ? n_max : 10, gt, report, doc);
        } else if (sub == mono) {
            code = cmd_monomial(matrix, tol, epsilon, m_cap, doc);
        } else if (sub == verify) {
            code = cmd_verify(suites, suite_config, doc);
        }
    } catch (InvariantViolation const& e) {
        err << "dyndeg: invariant violated: " << e.what() << "\n";
        return exit_verify_failed;
    } catch (std::invalid_argument const& e) {
        err << "dyndeg " << sub->get_name() << ": " << e.what() << "\n";
        return exit_bad_input;
    } catch (std::domain_error const& e) {
        err << "dyndeg " << sub->get_name() << ": " << e.what() << "\n";
        return exit_bad_input;
    } catch (std::exception const& e) {
        err << "dyndeg " << sub->get_name() << ": " << e.what() << "\n";
        return exit_verify_failed;
    }

    if (common.format == "human") {
        print_human(doc, out);
    } else {
        out << doc.dump() << "\n";
    }
    return code;
}

}  // namespace dyndeg::cli
