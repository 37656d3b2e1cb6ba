#pragma once

// Command implementations for the dompoly tool. Kept in a header so the test suites can drive
// them in-process through run().

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <dompoly/dompoly.hpp>
#include <dompoly/parallel.hpp>

namespace dompoly::cli {

enum class Command { compute, certify, roots, sweep, plot };

struct RunConfig {
    Command command = Command::compute;
    std::string family;
    std::string join;
    std::string range;
    std::string edge_list;
    std::string format;
    std::string out;
    bool oracle = false;
    bool odd_only = false;
    bool even_only = false;
    bool circle = false;
    double tol = 1e-12;
    std::size_t max_iter = 1000;
};

/// One polynomial to process: a family member, a join of two family members, or a graph file.
struct Instance {
    std::string family;
    std::size_t n = 0;
    std::size_t order = 0;
    /// Closed-form polynomial, when the input has one.
    std::function<std::optional<Poly>()> closed;
    /// The graph itself, for enumeration; may throw CapacityError.
    std::function<Graph()> graph;
};

struct UsageError : Error {
    using Error::Error;
};

namespace detail {

inline std::size_t parse_uint(std::string_view s, const std::string& what)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError("bad " + what + " '" + std::string(s) + "'");
    return v;
}

/// "a..b" (inclusive) or a single integer.
inline std::pair<std::size_t, std::size_t> parse_range(std::string_view s)
{
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_uint(s, "range");
        return {v, v};
    }
    const auto a = parse_uint(s.substr(0, dots), "range start");
    const auto b = parse_uint(s.substr(dots + 2), "range end");
    if (a > b) throw UsageError("empty range '" + std::string(s) + "'");
    return {a, b};
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto p = s.find(sep);
        out.push_back(s.substr(0, p));
        if (p == std::string_view::npos) break;
        s = s.substr(p + 1);
    }
    return out;
}

inline bool keep(std::size_t n, const RunConfig& cfg)
{
    if (cfg.odd_only && n % 2 == 0) return false;
    if (cfg.even_only && n % 2 == 1) return false;
    return true;
}

inline Instance family_instance(const FamilySpec& spec, std::string label, std::size_t n)
{
    Instance inst;
    inst.family = std::move(label);
    inst.n = n;
    inst.order = family_order(spec);
    inst.closed = [spec] { return closed_form(spec); };
    inst.graph = [spec] { return build_family(spec); };
    return inst;
}

/// --family name:p1[,p2] where at most one parameter may be a range a..b.
inline std::vector<Instance> expand_family(const RunConfig& cfg)
{
    const auto colon = cfg.family.find(':');
    if (colon == std::string::npos) throw UsageError("--family expects name:p1[,p2]");
    const auto fam = family_from_name(std::string_view(cfg.family).substr(0, colon));
    if (!fam) throw UsageError("unknown family '" + cfg.family.substr(0, colon) + "'");
    const auto parts = split(std::string_view(cfg.family).substr(colon + 1), ',');

    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::optional<std::size_t> ranged;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        ranges.push_back(parse_range(parts[i]));
        if (parts[i].find("..") != std::string_view::npos) {
            if (ranged) throw UsageError("--family allows a range in one parameter only");
            ranged = i;
        }
    }
    const std::size_t idx = ranged.value_or(0);
    std::vector<Instance> out;
    for (std::size_t v = ranges[idx].first; v <= ranges[idx].second; ++v) {
        if (!keep(v, cfg)) continue;
        FamilySpec spec{*fam, {}};
        for (std::size_t i = 0; i < ranges.size(); ++i) spec.params.push_back(i == idx ? v : ranges[i].first);
        validate(spec);
        out.push_back(family_instance(spec, std::string(family_name(*fam)), v));
    }
    return out;
}

/// One side of --join: a family with parameters that are integers, "n", "n+k" or "n-k".
struct JoinTerm {
    Family family;
    std::vector<std::pair<bool, long>> params; // (depends on n, offset or literal)
    std::string text;

    FamilySpec at(std::size_t n) const
    {
        FamilySpec spec{family, {}};
        for (auto [dep, v] : params) {
            const long value = dep ? static_cast<long>(n) + v : v;
            if (value < 0) throw InvalidArgument("join term " + text + " is negative at n=" + std::to_string(n));
            spec.params.push_back(static_cast<std::size_t>(value));
        }
        validate(spec);
        return spec;
    }
};

inline std::pair<bool, long> parse_param_expr(std::string_view s)
{
    if (s.empty()) throw UsageError("empty join parameter");
    if (s[0] != 'n') return {false, static_cast<long>(parse_uint(s, "join parameter"))};
    if (s.size() == 1) return {true, 0};
    const long k = static_cast<long>(parse_uint(s.substr(2), "join offset"));
    if (s[1] == '+') return {true, k};
    if (s[1] == '-') return {true, -k};
    throw UsageError("bad join parameter '" + std::string(s) + "'");
}

/// "H:n+1,B:n" -> two terms. A comma starts a new term when the next token contains ':'.
inline std::vector<JoinTerm> parse_join(std::string_view text)
{
    std::vector<JoinTerm> terms;
    for (auto tok : split(text, ',')) {
        const auto colon = tok.find(':');
        if (colon != std::string_view::npos) {
            const auto fam = family_from_name(tok.substr(0, colon));
            if (!fam) throw UsageError("unknown family '" + std::string(tok.substr(0, colon)) + "' in --join");
            terms.push_back({*fam, {parse_param_expr(tok.substr(colon + 1))}, std::string(tok)});
        } else {
            if (terms.empty()) throw UsageError("--join must start with name:param");
            terms.back().params.push_back(parse_param_expr(tok));
            terms.back().text += "," + std::string(tok);
        }
    }
    if (terms.size() != 2) throw UsageError("--join expects exactly two terms, e.g. H:n,H:n");
    for (const auto& t : terms)
        if (t.params.size() != family_arity(t.family))
            throw UsageError("join term '" + t.text + "' has the wrong number of parameters");
    return terms;
}

inline std::vector<Instance> expand_join(const RunConfig& cfg)
{
    const auto terms = parse_join(cfg.join);
    const auto [a, b] = cfg.range.empty() ? std::pair<std::size_t, std::size_t>{1, 1} : parse_range(cfg.range);
    std::string label = "join[";
    label += std::string(family_name(terms[0].family)) + ":" + terms[0].text.substr(terms[0].text.find(':') + 1);
    label += ";" + std::string(family_name(terms[1].family)) + ":" + terms[1].text.substr(terms[1].text.find(':') + 1);
    label += "]";
    // Commas inside a CSV field would break the row.
    for (auto& c : label)
        if (c == ',') c = ' ';
    std::vector<Instance> out;
    for (std::size_t n = a; n <= b; ++n) {
        if (!keep(n, cfg)) continue;
        const FamilySpec g = terms[0].at(n);
        const FamilySpec h = terms[1].at(n);
        Instance inst;
        inst.family = label;
        inst.n = n;
        inst.order = family_order(g) + family_order(h);
        inst.closed = [g, h] {
            return std::optional<Poly>(poly_join(family_polynomial(g), family_order(g), family_polynomial(h), family_order(h)));
        };
        inst.graph = [g, h] { return dompoly::join(build_family(g), build_family(h)); };
        out.push_back(std::move(inst));
    }
    return out;
}

inline std::vector<Instance> expand_edge_list(const RunConfig& cfg)
{
    std::ifstream in(cfg.edge_list);
    if (!in) throw UsageError("cannot open edge list '" + cfg.edge_list + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const Graph g = parse_edge_list(buf.str());
    Instance inst;
    inst.family = "edge_list";
    inst.n = g.order();
    inst.order = g.order();
    inst.closed = [] { return std::optional<Poly>(); };
    inst.graph = [g] { return g; };
    return {inst};
}

inline std::vector<Instance> expand(const RunConfig& cfg)
{
    const int sources = !cfg.family.empty() + !cfg.join.empty() + !cfg.edge_list.empty();
    if (sources != 1) throw UsageError("give exactly one of --family, --join, --edge-list");
    if (!cfg.range.empty() && cfg.join.empty()) throw UsageError("--range only applies to --join");
    if (cfg.odd_only && cfg.even_only) throw UsageError("--odd-only and --even-only are exclusive");
    if (!cfg.family.empty()) return expand_family(cfg);
    if (!cfg.join.empty()) return expand_join(cfg);
    return expand_edge_list(cfg);
}

struct Computed {
    Poly poly;
    std::string source;
    bool oracle_verified = false;
};

/**
 * The closed form when available. With `oracle`, the graph is also enumerated and compared,
 * and a mismatch is an IntegrityError.
 */
inline Computed compute_polynomial(const Instance& inst, bool oracle)
{
    const auto closed = inst.closed();
    if (closed && !oracle) return {*closed, "closed_form", false};
    if (inst.order > enumerator_cap)
        throw CapacityError(inst.family + " n=" + std::to_string(inst.n) + ": order " + std::to_string(inst.order) +
                            " exceeds the enumerator cap of " + std::to_string(enumerator_cap) +
                            (closed ? "" : " and no closed form exists"));
    Poly enumerated = domination_polynomial(inst.graph());
    if (!closed) return {std::move(enumerated), "enumerator", false};
    if (!(enumerated == *closed))
        throw IntegrityError(inst.family + " n=" + std::to_string(inst.n) + ": closed form " + closed->to_string() +
                             " disagrees with enumeration " + enumerated.to_string());
    return {*closed, "closed_form", true};
}

inline std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v == 0.0 ? 0.0 : v);
    return buf;
}

/// Runs fn over all instances (in parallel), keeping results in input order. Failures are
/// reported on err and make the return value false.
template <class Result, class Fn>
bool for_instances(const std::vector<Instance>& instances, std::vector<std::optional<Result>>& results, Fn fn,
                   std::ostream& err)
{
    results.assign(instances.size(), std::nullopt);
    std::vector<std::string> errors(instances.size());
    parallel_for(instances.size(), [&](std::size_t i) {
        try {
            results[i] = fn(instances[i]);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    bool ok = true;
    for (std::size_t i = 0; i < instances.size(); ++i)
        if (!results[i]) {
            ok = false;
            err << "error: " << instances[i].family << " n=" << instances[i].n << ": " << errors[i] << '\n';
        }
    return ok;
}

inline nlohmann::json instance_header(const Instance& inst)
{
    return {{"family", inst.family}, {"n", inst.n}, {"order", inst.order}};
}

inline int cmd_compute(const RunConfig& cfg, const std::vector<Instance>& instances, std::ostream& out, std::ostream& err)
{
    if (cfg.format != "json") throw UsageError("compute supports --format json only");
    std::vector<std::optional<Computed>> res;
    const bool ok = for_instances(instances, res, [&](const Instance& i) { return compute_polynomial(i, cfg.oracle); }, err);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!res[i]) continue;
        auto j = instance_header(instances[i]);
        j["coeffs"] = poly_to_json(res[i]->poly)["coeffs"];
        j["source"] = res[i]->source;
        j["oracle_verified"] = res[i]->oracle_verified;
        out << j.dump() << '\n';
    }
    return ok ? 0 : 1;
}

inline int cmd_certify(const RunConfig& cfg, const std::vector<Instance>& instances, std::ostream& out, std::ostream& err)
{
    if (cfg.format != "json" && cfg.format != "csv") throw UsageError("certify supports --format json|csv");
    struct Row {
        CgCertificate cert;
        bool odd;
    };
    std::vector<std::optional<Row>> res;
    const bool ok = for_instances(
        instances, res,
        [&](const Instance& i) {
            const Poly p = compute_polynomial(i, cfg.oracle).poly;
            return Row{certify_cg(p), check_oddness(p)};
        },
        err);
    bool all = ok;
    if (cfg.format == "csv")
        out << "family,n,order,gamma,nonzero_real_root_count,in_cg,odd,v_neg_inf,v_minus_one,v_zero,v_pos_inf\n";
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!res[i]) continue;
        const auto& c = res[i]->cert;
        all = all && c.in_cg;
        if (cfg.format == "json") {
            auto j = instance_header(instances[i]);
            j.update(certificate_to_json(c));
            j["odd"] = res[i]->odd;
            out << j.dump() << '\n';
        } else {
            out << instances[i].family << ',' << instances[i].n << ',' << instances[i].order << ',' << c.gamma << ','
                << c.nonzero_real_root_count << ',' << (c.in_cg ? "true" : "false") << ','
                << (res[i]->odd ? "true" : "false") << ',' << c.evidence.at_neg_inf << ',' << c.evidence.at_minus_one
                << ',' << c.evidence.at_zero << ',' << c.evidence.at_pos_inf << '\n';
        }
    }
    if (cfg.format == "json")
        out << nlohmann::json{{"all_in_cg", all}, {"instances", instances.size()}}.dump() << '\n';
    err << "all_in_cg: " << (all ? "true" : "false") << '\n';
    return ok ? 0 : 1;
}

inline bool find_all_roots(const RunConfig& cfg, const std::vector<Instance>& instances,
                           std::vector<std::optional<RootSet>>& res, std::ostream& err)
{
    return for_instances(
        instances, res,
        [&](const Instance& i) { return find_roots(compute_polynomial(i, cfg.oracle).poly, cfg.tol, cfg.max_iter); },
        err);
}

inline int cmd_roots(const RunConfig& cfg, const std::vector<Instance>& instances, std::ostream& out, std::ostream& err)
{
    if (cfg.format != "csv" && cfg.format != "json") throw UsageError("roots supports --format csv|json");
    std::vector<std::optional<RootSet>> res;
    const bool ok = find_all_roots(cfg, instances, res, err);
    if (cfg.format == "csv") out << "family,n,re,im,residual\n";
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!res[i]) continue;
        if (cfg.format == "csv") {
            for (const auto& r : res[i]->roots)
                out << instances[i].family << ',' << instances[i].n << ',' << fmt("%.15g", r.z.real()) << ','
                    << fmt("%.15g", r.z.imag()) << ',' << fmt("%.3e", r.residual) << '\n';
        } else {
            auto j = instance_header(instances[i]);
            j["zero_multiplicity"] = res[i]->zero_multiplicity;
            auto arr = nlohmann::json::array();
            for (const auto& r : res[i]->roots)
                arr.push_back({{"re", r.z.real()}, {"im", r.z.imag()}, {"residual", r.residual}});
            j["roots"] = arr;
            out << j.dump() << '\n';
        }
    }
    return ok ? 0 : 1;
}

inline int cmd_plot(const RunConfig& cfg, const std::vector<Instance>& instances, std::ostream& out, std::ostream& err)
{
    if (cfg.format != "svg") throw UsageError("plot supports --format svg only");
    std::vector<std::optional<RootSet>> res;
    const bool ok = find_all_roots(cfg, instances, res, err);
    std::vector<std::complex<double>> pts;
    for (const auto& r : res)
        if (r)
            for (const auto& root : r->roots) pts.push_back(root.z);
    ScatterOptions opt;
    opt.title = "Domination roots: " + (cfg.family.empty() ? (cfg.join.empty() ? cfg.edge_list : cfg.join + " n=" + cfg.range) : cfg.family);
    if (cfg.circle) opt.circle = std::pair{std::complex<double>(-1.0, 0.0), 1.0};
    out << render_scatter_svg(pts, opt);
    return ok ? 0 : 1;
}

/// Per-instance exact summary: order, domination number, total dominating sets and verdict.
inline int cmd_sweep(const RunConfig& cfg, const std::vector<Instance>& instances, std::ostream& out, std::ostream& err)
{
    if (cfg.format != "csv" && cfg.format != "json") throw UsageError("sweep supports --format csv|json");
    struct Row {
        Poly poly;
        CgCertificate cert;
    };
    std::vector<std::optional<Row>> res;
    const bool ok = for_instances(
        instances, res,
        [&](const Instance& i) {
            Poly p = compute_polynomial(i, cfg.oracle).poly;
            auto c = certify_cg(p);
            return Row{std::move(p), c};
        },
        err);
    if (cfg.format == "csv") out << "family,n,order,gamma,dominating_sets,odd,value_at_minus_one,in_cg,nonzero_real_roots\n";
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!res[i]) continue;
        const auto& p = res[i]->poly;
        const auto& c = res[i]->cert;
        const BigInt at1 = eval_int(p, BigInt(1));
        const BigInt atm1 = eval_int(p, BigInt(-1));
        if (cfg.format == "csv") {
            out << instances[i].family << ',' << instances[i].n << ',' << instances[i].order << ',' << c.gamma << ','
                << at1 << ',' << (check_oddness(p) ? "true" : "false") << ',' << atm1 << ','
                << (c.in_cg ? "true" : "false") << ',' << c.nonzero_real_root_count << '\n';
        } else {
            auto j = instance_header(instances[i]);
            j["gamma"] = c.gamma;
            j["dominating_sets"] = to_decimal(at1);
            j["odd"] = check_oddness(p);
            j["value_at_minus_one"] = to_decimal(atm1);
            j["in_cg"] = c.in_cg;
            j["nonzero_real_roots"] = c.nonzero_real_root_count;
            out << j.dump() << '\n';
        }
    }
    return ok ? 0 : 1;
}

inline const char* default_format(Command c)
{
    switch (c) {
    case Command::compute:
    case Command::certify:
        return "json";
    case Command::roots:
    case Command::sweep:
        return "csv";
    case Command::plot:
        return "svg";
    }
    return "json";
}

inline int execute(RunConfig cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.format.empty()) cfg.format = default_format(cfg.command);
    if (!(cfg.tol >= 1e-14 && cfg.tol <= 1e-6)) throw UsageError("--tol must lie in [1e-14, 1e-6]");
    if (cfg.max_iter == 0) throw UsageError("--max-iter must be positive");
    const auto instances = expand(cfg);

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + cfg.out + "'");
    }
    std::ostream& sink = cfg.out.empty() ? out : file;
    switch (cfg.command) {
    case Command::compute: return cmd_compute(cfg, instances, sink, err);
    case Command::certify: return cmd_certify(cfg, instances, sink, err);
    case Command::roots: return cmd_roots(cfg, instances, sink, err);
    case Command::sweep: return cmd_sweep(cfg, instances, sink, err);
    case Command::plot: return cmd_plot(cfg, instances, sink, err);
    }
    return 2;
}

} // namespace detail

/// Exit codes: 0 success, 1 a requested instance failed, 2 usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Domination polynomials: exact computation, real-root certification and complex roots"};
    app.name("dompoly");
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "family spec name:p1[,p2]; one parameter may be a range a..b");
        sub->add_option("--join", cfg.join, "join of two family terms, e.g. H:n+1,B:n");
        sub->add_option("--range", cfg.range, "values of n for --join, a..b");
        sub->add_option("--edge-list", cfg.edge_list, "graph file: 'n m' header then m lines 'u v'");
        sub->add_flag("--oracle", cfg.oracle, "also enumerate dominating sets and cross-check the closed form");
        sub->add_flag("--odd-only", cfg.odd_only, "keep odd n only");
        sub->add_flag("--even-only", cfg.even_only, "keep even n only");
        sub->add_option("--format", cfg.format, "json|csv|svg")->check(CLI::IsMember({"json", "csv", "svg"}));
        sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
        sub->add_option("--tol", cfg.tol, "root solver tolerance in [1e-14, 1e-6]");
        sub->add_option("--max-iter", cfg.max_iter, "root solver iteration cap");
    };
    struct Sub {
        const char* name;
        const char* help;
        Command cmd;
    };
    const Sub subs[] = {
        {"compute", "print the exact domination polynomial", Command::compute},
        {"certify", "certify whether any nonzero real domination root exists", Command::certify},
        {"roots", "locate all complex domination roots (CSV)", Command::roots},
        {"sweep", "exact invariants for each instance of a range", Command::sweep},
        {"plot", "SVG scatter of the domination roots", Command::plot},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        add_common(sub);
        if (s.cmd == Command::plot) sub->add_flag("--circle", cfg.circle, "overlay the unit circle centred at -1");
        sub->callback([&cfg, cmd = s.cmd] { cfg.command = cmd; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    try {
        return detail::execute(cfg, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace dompoly::cli
