#include "crossnum/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crossnum/bounds.hpp"
#include "crossnum/combinatorics.hpp"
#include "crossnum/errors.hpp"
#include "crossnum/io.hpp"
#include "crossnum/spectra.hpp"
#include "crossnum/tractability.hpp"

namespace crossnum::cli {

namespace {

using io::json;

struct Common {
    std::uint64_t max_enum = 0;
    std::string out_path;
    std::string format;
};

struct KindArgs {
    std::string kind = "sharp";
    double s = 0.0;
    int m = 0;
    CLI::Option* s_opt = nullptr;
    CLI::Option* m_opt = nullptr;

    void attach(CLI::App* app) {
        app->add_option("--kind", kind, "sharp | plus | star | intm")
            ->check(CLI::IsMember({"sharp", "plus", "star", "intm"}));
        s_opt = app->add_option("--s", s, "smoothness (decimal)");
        m_opt = app->add_option("--m", m, "integer smoothness for intm");
        s_opt->excludes(m_opt);
    }

    WeightKind resolve() const {
        if (kind == "intm") {
            if (!*m_opt) throw InvalidArgument("--kind intm needs --m");
            return WeightKind::integer_m(m);
        }
        if (!*s_opt) throw InvalidArgument("--kind " + kind + " needs --s");
        return parse_weight_kind(kind, s, 0);
    }
};

void add_common(CLI::App* app, Common& c, const std::string& default_format) {
    c.format = default_format;
    app->add_option("--max-enum", c.max_enum, "override the enumeration budget");
    app->add_option("--out", c.out_path, "write the payload to this file");
    app->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
}

// Payload is assembled in memory and only written once the command is done.
struct Result {
    int code = kOk;
    std::string payload;
};

void annotate(json& j, const Common& c) {
    if (c.max_enum) j["max_enum"] = c.max_enum;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

Result cmd_count(std::uint64_t r, int d, bool brute, const Common& c) {
    const CrossSpec spec(r, d);
    const BigCount count = count_cross(spec);
    json j = io::count_json(spec, count);
    Result res;
    if (brute) {
        const BigCount oracle = count_cross_bruteforce(spec);
        j["brute"] = to_decimal(oracle);
        j["match"] = oracle == count;
        if (oracle != count) res.code = kCheckFailed;
    }
    annotate(j, c);
    res.payload = dump(j);
    return res;
}

Result cmd_spectrum(const KindArgs& ka, int d, std::uint64_t n, std::uint64_t nmax, bool indices, const Common& c) {
    const WeightKind kind = ka.resolve();
    if ((n == 0) == (nmax == 0)) throw InvalidArgument("spectrum needs exactly one of --n or --nmax");
    Result res;
    if (n) {
        json j;
        j["kind"] = kind.describe();
        j["d"] = d;
        j["n"] = n;
        if (kind.tag() == WeightKind::Tag::Sharp) {
            const auto a = exact_an_sharp(BigCount(n), d, kind.s());
            j["a_n"] = a.value();
            j["r"] = a.base();
            j["certification"] = "exact";
        } else {
            const auto table = rearranged_spectrum(kind, d, n);
            j["a_n"] = table[n];
            j["certification"] = "enumerated-certified";
            j["enumeration_radius"] = table.enumeration_radius;
        }
        annotate(j, c);
        res.payload = dump(j);
        return res;
    }
    SpectrumOptions opts;
    opts.keep_indices = indices;
    const auto table = rearranged_spectrum(kind, d, nmax, opts);
    if (c.format == "csv") {
        std::ostringstream os;
        io::write_spectrum_csv(os, table);
        res.payload = os.str();
    } else {
        json j = io::spectrum_json(table);
        if (indices) {
            json idx = json::array();
            for (const auto& k : table.indices) idx.push_back(std::vector<std::int64_t>(k.begin(), k.end()));
            j["indices"] = idx;
        }
        annotate(j, c);
        res.payload = dump(j);
    }
    return res;
}

std::vector<double> default_eps_grid() {
    std::vector<double> g;
    for (int k = 1; k <= 10; ++k) g.push_back(std::exp2(-k));
    return g;
}

std::vector<int> default_d_grid() {
    std::vector<int> g;
    for (int d = 2; d <= 10; ++d) g.push_back(d);
    return g;
}

struct VerifyArgs {
    std::string formula;
    bool all = false;
    int d = 2;
    double s = 1.0;
    std::uint64_t r_max = 0;
    std::uint64_t n_max = 10000;
    CLI::Option* t_opt = nullptr;
    CLI::Option* ct_opt = nullptr;
    double t = 0.0;
    double C_t = 0.0;
    std::vector<int> d_grid;
    std::vector<double> eps_grid;
    std::string from, to;
    double s_to = 0.0;
    std::uint64_t radius = 10;
};

VerificationReport run_formula(FormulaName name, const VerifyArgs& v) {
    const auto& f = formula(name);
    std::vector<BigCount> grid;
    if (f.family == SpectrumFamily::Sharp) {
        std::uint64_t r_hi = v.r_max;
        if (!r_hi) r_hi = (name == FormulaName::PreUpper46 || name == FormulaName::PreLower47)
                              ? (std::uint64_t{1} << std::min(v.d, 40))
                              : 10000;
        grid = plateau_grid(name, v.d, v.s, 1, r_hi);
    } else {
        grid = dense_grid(name, v.d, v.s, 1, v.n_max);
    }
    return verify_bound(name, v.d, v.s, grid);
}

Result cmd_verify(const VerifyArgs& v, const Common& c) {
    Result res;
    json j;
    bool pass = true;
    if (!v.from.empty() || !v.to.empty()) {
        if (v.from.empty() || v.to.empty()) throw InvalidArgument("embedding checks need both --from and --to");
        auto mk = [](const std::string& k, double s) {
            return k == "intm" ? WeightKind::integer_m(static_cast<int>(std::lround(s))) : parse_weight_kind(k, s, 0);
        };
        const auto from = mk(v.from, v.s);
        const auto to = mk(v.to, v.s_to > 0 ? v.s_to : v.s);
        const auto rep = verify_weight_domination(from, to, v.d, v.radius);
        pass = rep.pass;
        j = {{"from", from.describe()}, {"to", to.describe()}, {"d", v.d}, {"regime", rep.regime},
             {"constant", rep.constant}, {"checked", rep.checked}, {"worst_ratio", rep.worst_ratio}, {"pass", rep.pass}};
        if (rep.counterexample)
            j["counterexample"] = std::vector<std::int64_t>(rep.counterexample->begin(), rep.counterexample->end());
    } else if (v.formula == "qpt") {
        const auto proof = qpt_proof_constants(v.s);
        const double t = *v.t_opt ? v.t : proof.t;
        const double C_t = *v.ct_opt ? v.C_t : proof.C_t;
        const auto cert = qpt_certify(v.s, v.d_grid.empty() ? default_d_grid() : v.d_grid,
                                      v.eps_grid.empty() ? default_eps_grid() : v.eps_grid, t, C_t);
        pass = cert.pass;
        j = io::certificate_json(cert);
    } else if (v.all) {
        j = json::array();
        for (const auto& f : all_formulas()) {
            if (f.side == BoundSide::Reference) continue;
            if (f.family == SpectrumFamily::IntegerM && std::round(v.s) != v.s) continue;
            const auto rep = run_formula(f.name, v);
            auto rj = io::report_json(rep);
            // experimental formulas are reported but do not decide the exit code
            if (f.experimental)
                rj["experimental"] = true;
            else
                pass = pass && rep.pass();
            j.push_back(std::move(rj));
        }
        j = {{"reports", j}, {"pass", pass}};
    } else {
        const auto name = parse_formula(v.formula);
        if (!name) throw InvalidArgument("unknown formula: " + v.formula);
        const auto rep = run_formula(*name, v);
        pass = rep.pass();
        j = io::report_json(rep);
    }
    annotate(j, c);
    res.payload = dump(j);
    res.code = pass ? kOk : kCheckFailed;
    return res;
}

Result cmd_tract(const KindArgs& ka, const std::vector<int>& ds, const std::vector<double>& epss, bool exact,
                 const Common& c) {
    const WeightKind kind = ka.resolve();
    if (ds.empty() || epss.empty()) throw InvalidArgument("tract needs --d and --eps");
    Result res;
    const bool table = ds.size() > 1 || epss.size() > 1 || c.format == "csv";
    if (table) {
        std::vector<io::ComplexityRow> rows;
        for (int d : ds)
            for (double eps : epss) {
                const TractabilityQuery q(eps, d, kind);
                const auto box = info_complexity_bounds(q, exact);
                if (!box.exact) throw InvalidArgument("complexity tables need an exact value; use --kind sharp or --exact with d <= 3");
                rows.push_back({eps, d, *box.exact});
            }
        if (c.format == "csv") {
            std::ostringstream os;
            io::write_complexity_csv(os, rows);
            res.payload = os.str();
        } else {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back({{"eps", r.eps}, {"d", r.d}, {"n", to_decimal(r.n)}});
            json j = {{"kind", kind.describe()}, {"rows", arr}};
            annotate(j, c);
            res.payload = dump(j);
        }
        return res;
    }
    const TractabilityQuery q(epss.front(), ds.front(), kind);
    json j = {{"eps", q.eps}, {"d", q.d}};
    if (kind.tag() == WeightKind::Tag::Sharp) {
        j["s"] = kind.s();
        j["n"] = to_decimal(info_complexity_sharp(q));
    } else {
        const auto box = info_complexity_bounds(q, exact);
        j["kind"] = kind.describe();
        j["canonical"] = box.canonical.describe();
        j["lower"] = to_decimal(box.lower);
        j["upper"] = to_decimal(box.upper);
        if (box.exact) j["n"] = to_decimal(*box.exact);
    }
    annotate(j, c);
    res.payload = dump(j);
    return res;
}

Result cmd_cross(std::uint64_t r, int d, int dyadic, const Common& c) {
    std::vector<IndexVector> pts;
    if (dyadic >= 0)
        pts = enumerate_dyadic_cross(dyadic, d);
    else
        pts = collect_cross(CrossSpec(r, d));
    Result res;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& k : pts) arr.push_back(std::vector<std::int64_t>(k.begin(), k.end()));
        json j = {{"d", d}, {"count", std::to_string(pts.size())}, {"points", arr}};
        if (dyadic >= 0)
            j["m"] = dyadic;
        else
            j["r"] = r;
        annotate(j, c);
        res.payload = dump(j);
    } else {
        std::ostringstream os;
        io::write_cross_csv(os, d, pts);
        res.payload = os.str();
    }
    return res;
}

Result cmd_trace(int d, double s, const std::vector<std::uint64_t>& rs, const Common& c) {
    if (rs.empty()) throw InvalidArgument("trace needs --rs");
    const auto trace = limit_ratio_trace(d, s, rs);
    const double constant = asymptotic_constant(d, s);
    Result res;
    if (c.format == "json") {
        json j = io::trace_json(trace, constant);
        annotate(j, c);
        res.payload = dump(j);
    } else {
        std::ostringstream os;
        io::write_trace_csv(os, trace, constant);
        res.payload = os.str();
    }
    return res;
}

void emit(const Result& res, const Common& c, std::ostream& out) {
    if (c.out_path.empty()) {
        out << res.payload;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + c.out_path);
    f << res.payload;
}

void error_json(std::ostream& err, const std::string& kind, const std::string& what) {
    err << json{{"error", kind}, {"message", what}}.dump() << "\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"crossnum: hyperbolic-cross counting, spectra, bounds and tractability"};
    app.require_subcommand(1);

    Common c_count, c_spec, c_verify, c_tract, c_cross, c_trace;

    std::uint64_t count_r = 0;
    int count_d = 0;
    bool count_brute = false;
    auto* count = app.add_subcommand("count", "C(r,d) via the counting identity");
    count->add_option("--r", count_r, "radius")->required();
    count->add_option("--d", count_d, "dimension")->required();
    count->add_flag("--brute", count_brute, "also count by enumeration and compare");
    add_common(count, c_count, "json");

    KindArgs spec_kind;
    int spec_d = 0;
    std::uint64_t spec_n = 0, spec_nmax = 0;
    bool spec_indices = false;
    auto* spectrum = app.add_subcommand("spectrum", "approximation numbers a_n or a table of them");
    spec_kind.attach(spectrum);
    spectrum->add_option("--d", spec_d, "dimension")->required();
    auto* n_opt = spectrum->add_option("--n", spec_n, "single index");
    auto* nmax_opt = spectrum->add_option("--nmax", spec_nmax, "table length");
    n_opt->excludes(nmax_opt);
    spectrum->add_flag("--indices", spec_indices, "include the index set (json)");
    add_common(spectrum, c_spec, "json");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check bounds, embeddings or a QPT certificate");
    auto* f_opt = verify->add_option("--formula", va.formula, "formula id, or qpt");
    auto* all_opt = verify->add_flag("--all", va.all, "every formula for the given d, s");
    f_opt->excludes(all_opt);
    verify->add_option("--d", va.d, "dimension");
    verify->add_option("--s", va.s, "smoothness (integer order for intm formulas)");
    verify->add_option("--rmax", va.r_max, "largest plateau base r for # formulas");
    verify->add_option("--nmax", va.n_max, "largest n for enumerated spectra");
    va.t_opt = verify->add_option("--t", va.t, "QPT exponent");
    va.ct_opt = verify->add_option("--Ct", va.C_t, "QPT constant");
    verify->add_option("--dgrid", va.d_grid, "QPT dimensions")->delimiter(',');
    verify->add_option("--epsgrid", va.eps_grid, "QPT accuracies")->delimiter(',');
    verify->add_option("--from", va.from, "embedding source kind");
    verify->add_option("--to", va.to, "embedding target kind");
    verify->add_option("--s-to", va.s_to, "target smoothness (defaults to --s)");
    verify->add_option("--radius", va.radius, "sup-norm radius for embedding checks");
    add_common(verify, c_verify, "json");

    KindArgs tract_kind;
    std::vector<int> tract_d;
    std::vector<double> tract_eps;
    bool tract_exact = false;
    auto* tract = app.add_subcommand("tract", "information complexity n(eps,d)");
    tract_kind.attach(tract);
    tract->add_option("--d", tract_d, "dimension(s)")->required()->delimiter(',');
    tract->add_option("--eps", tract_eps, "accuracy (or accuracies)")->required()->delimiter(',');
    tract->add_flag("--exact", tract_exact, "add the enumerated exact value (d <= 3)");
    add_common(tract, c_tract, "json");

    std::uint64_t cross_r = 1;
    int cross_d = 0, cross_m = -1;
    auto* cross = app.add_subcommand("cross", "export N(r,d) or a dyadic cross H(m,d)");
    auto* cr_opt = cross->add_option("--r", cross_r, "radius");
    auto* cm_opt = cross->add_option("--dyadic", cross_m, "dyadic level m");
    cr_opt->excludes(cm_opt);
    cross->add_option("--d", cross_d, "dimension")->required();
    add_common(cross, c_cross, "csv");

    int trace_d = 0;
    double trace_s = 1.0;
    std::vector<std::uint64_t> trace_rs;
    auto* trace = app.add_subcommand("trace", "limit ratio n^s a_n / (ln n)^{(d-1)s} at breakpoints");
    trace->add_option("--d", trace_d, "dimension")->required();
    trace->add_option("--s", trace_s, "smoothness");
    trace->add_option("--rs", trace_rs, "plateau bases r")->required()->delimiter(',');
    add_common(trace, c_trace, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        error_json(err, "arguments", e.what());
        return kBadArgs;
    }

    const Common* common = nullptr;
    try {
        Result res;
        auto with_budget = [](const Common& c) { set_max_enumeration(c.max_enum); };
        if (*count) {
            common = &c_count;
            with_budget(c_count);
            res = cmd_count(count_r, count_d, count_brute, c_count);
        } else if (*spectrum) {
            common = &c_spec;
            with_budget(c_spec);
            res = cmd_spectrum(spec_kind, spec_d, spec_n, spec_nmax, spec_indices, c_spec);
        } else if (*verify) {
            common = &c_verify;
            with_budget(c_verify);
            if (va.formula.empty() && !va.all && va.from.empty() && va.to.empty())
                throw InvalidArgument("verify needs --formula, --all or --from/--to");
            res = cmd_verify(va, c_verify);
        } else if (*tract) {
            common = &c_tract;
            with_budget(c_tract);
            res = cmd_tract(tract_kind, tract_d, tract_eps, tract_exact, c_tract);
        } else if (*cross) {
            common = &c_cross;
            with_budget(c_cross);
            res = cmd_cross(cross_r, cross_d, cross_m, c_cross);
        } else if (*trace) {
            common = &c_trace;
            with_budget(c_trace);
            res = cmd_trace(trace_d, trace_s, trace_rs, c_trace);
        }
        if (common->max_enum && common->format == "csv")
            err << json{{"max_enum", common->max_enum}}.dump() << "\n";
        emit(res, *common, out);
        set_max_enumeration(0);
        return res.code;
    } catch (const ResourceLimit& e) {
        set_max_enumeration(0);
        error_json(err, "resource-limit", e.what());
        return kResource;
    } catch (const std::invalid_argument& e) {
        set_max_enumeration(0);
        error_json(err, "invalid-argument", e.what());
        return kBadArgs;
    } catch (const std::exception& e) {
        set_max_enumeration(0);
        error_json(err, "internal", e.what());
        return kInternal;
    }
}

} // namespace crossnum::cli
