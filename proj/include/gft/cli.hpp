#pragma once

// Command-line front end. `run` is the whole program; tools/gft.cpp only
// forwards argv to it so the commands can be exercised in-process by tests.
//
// Exit codes: 0 success, 1 malformed input or I/O failure, 2 a requested
// claim's hypotheses fail, 3 a search found a bound violation.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gft/bounds.hpp"
#include "gft/classes.hpp"
#include "gft/functionals.hpp"
#include "gft/json_io.hpp"
#include "gft/verify.hpp"

namespace gft::cli {

enum class Exit : int { ok = 0, malformed = 1, gate_failed = 2, violation = 3 };

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed --phi argument.
struct PhiSpec {
    std::string text;
    Family family;
    std::vector<double> params;
    MindaPhi phi;
};

namespace detail {

inline std::vector<double> parse_numbers(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw usage_error("not a number: '" + item + "'");
        }
        if (used != item.size()) throw usage_error("not a number: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

/// Shortest text that reads back to the same double.
inline std::string fmt(double v) {
    char buf[32];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

} // namespace detail

/// janowski:A,B | alpha:a | beta:b | lambda:l | custom:B1,B2,B3[,B4..]
inline PhiSpec parse_phi(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw usage_error("phi spec needs kind:params, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const auto params = detail::parse_numbers(text.substr(colon + 1));
    const auto need = [&](std::size_t n) {
        if (params.size() != n) throw usage_error("phi '" + kind + "' takes " + std::to_string(n) + " parameter(s)");
    };
    try {
        if (kind == "janowski") {
            need(2);
            return {text, Family::janowski, params, MindaPhi::janowski(params[0], params[1])};
        }
        if (kind == "alpha") {
            need(1);
            return {text, Family::alpha, params, MindaPhi::order_alpha(params[0])};
        }
        if (kind == "beta") {
            need(1);
            return {text, Family::beta, params, MindaPhi::power(params[0])};
        }
        if (kind == "lambda") {
            need(1);
            return {text, Family::lambda, params, MindaPhi::robertson(params[0])};
        }
        if (kind == "custom") {
            if (params.empty()) throw usage_error("custom phi needs B1[,B2,...]");
            return {text, Family::generic, params, MindaPhi::custom(params)};
        }
    } catch (const invalid_phi& e) {
        throw usage_error(e.what());
    }
    throw usage_error("unknown phi kind '" + kind + "'");
}

/// Corollary claims that apply to this phi spec, with the parameter to feed them.
inline std::vector<std::pair<Claim, double>> applicable_corollaries(const PhiSpec& spec) {
    std::vector<std::pair<Claim, double>> out;
    const auto is_sc = [&] {
        return (spec.family == Family::alpha && spec.params[0] == 0.0) ||
               (spec.family == Family::janowski && spec.params[0] == 1.0 && spec.params[1] == -1.0);
    };
    switch (spec.family) {
    case Family::janowski:
    case Family::alpha:
        for (Claim c : {Claim::C1i, Claim::C1ii, Claim::C2i, Claim::C2ii, Claim::C4, Claim::C5}) out.emplace_back(c, 0.0);
        if (spec.family == Family::alpha) {
            out.emplace_back(Claim::C6, spec.params[0]);
            out.emplace_back(Claim::C7, spec.params[0]);
        }
        break;
    case Family::beta:
        out.emplace_back(Claim::SSb, spec.params[0]);
        out.emplace_back(Claim::CCb, spec.params[0]);
        break;
    case Family::lambda: out.emplace_back(Claim::Crlr, spec.params[0]); break;
    default: break;
    }
    if (is_sc()) {
        out.emplace_back(Claim::CS, 0.0);
        out.emplace_back(Claim::CC, 0.0);
    }
    return out;
}

inline std::pair<double, double> janowski_ab(const PhiSpec& spec) {
    if (spec.family == Family::alpha) return {1.0 - 2.0 * spec.params[0], -1.0};
    return {spec.params[0], spec.params[1]};
}

/// Reports for one claim on a phi spec; corollaries with several
/// functionals yield one report each.
inline std::vector<BoundReport> reports_for(Claim claim, const PhiSpec& spec) {
    if (is_theorem(claim)) return {bound_theorem(claim, spec.phi)};
    const auto applicable = applicable_corollaries(spec);
    const auto it = std::find_if(applicable.begin(), applicable.end(), [&](const auto& p) { return p.first == claim; });
    if (it == applicable.end())
        throw usage_error(std::string("claim ") + to_string(claim) + " does not apply to phi '" + spec.text + "'");
    const auto info = claim_info(claim);
    if (info.family == Family::janowski) {
        const auto [a, b] = janowski_ab(spec);
        return {bound_janowski(claim, a, b)};
    }
    std::vector<BoundReport> out;
    for (Functional f : info.functionals) out.push_back(bound_corollary(claim, f, it->second));
    return out;
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw usage_error("cannot open output path '" + path + "'");
    file << text;
    if (!file) throw usage_error("cannot write output path '" + path + "'");
}

struct Options {
    std::string phi;
    std::vector<std::string> claims;
    bool all = false;
    std::string format = "json";
    std::string output;
    SearchBudget budget;
    std::uint64_t seed = 0;
    std::string kind = "starlike";
    std::size_t order = default_order;
};

inline std::vector<Claim> parse_claims(const std::vector<std::string>& names) {
    std::vector<Claim> out;
    for (const auto& n : names) {
        const auto c = claim_from_string(n);
        if (!c) throw usage_error("unknown claim '" + n + "'");
        out.push_back(*c);
    }
    return out;
}

inline std::string render_reports(const std::vector<BoundReport>& reports, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << nlohmann::json(reports).dump(2) << '\n';
    } else if (format == "csv") {
        os << "claim_id,functional,class,phi,hypotheses_ok,bound,region\n";
        for (const auto& r : reports)
            os << to_string(r.claim) << ',' << to_string(r.functional) << ',' << to_string(r.class_kind) << ','
               << r.phi << ',' << (r.hypotheses_ok ? "true" : "false") << ','
               << (r.bound ? detail::fmt(*r.bound) : "") << ',' << (r.region ? to_string(*r.region) : "") << '\n';
    } else {
        for (const auto& r : reports) {
            os << to_string(r.claim) << " [" << to_string(r.functional) << ", " << to_string(r.class_kind) << "] "
               << r.phi << ": ";
            if (r.bound) os << "bound " << detail::fmt(*r.bound) << '\n';
            else os << "no claim (hypotheses fail)\n";
            for (const auto& g : r.gates) os << "  " << (g.ok ? "ok   " : "FAIL ") << g.name << '\n';
            for (const auto& n : r.notes) os << "  note: " << n << '\n';
        }
    }
    return os.str();
}

inline int cmd_bound(const Options& o, std::ostream& out, std::ostream& err) {
    const auto spec = parse_phi(o.phi);
    std::vector<Claim> claims = parse_claims(o.claims);
    if (o.all || claims.empty()) {
        claims.assign(theorem_claims.begin(), theorem_claims.end());
        for (const auto& [c, t] : applicable_corollaries(spec)) claims.push_back(c);
    }
    std::vector<BoundReport> reports;
    for (Claim c : claims)
        for (auto& r : reports_for(c, spec)) reports.push_back(std::move(r));
    write_output(o.output, render_reports(reports, o.format), out);
    for (const auto& r : reports)
        for (const auto& g : r.gates)
            if (!g.ok) err << "gft: " << to_string(r.claim) << " on " << r.phi << ": gate failed: " << g.name << '\n';
    const bool all_ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.hypotheses_ok; });
    return static_cast<int>(all_ok ? Exit::ok : Exit::gate_failed);
}

/// Corollary bounds matching a theorem claim on this phi spec.
inline std::vector<BoundReport> matching_corollaries(Claim theorem, const PhiSpec& spec) {
    std::vector<BoundReport> out;
    const auto info = claim_info(theorem);
    for (const auto& [c, t] : applicable_corollaries(spec)) {
        const auto ci = claim_info(c);
        if (ci.class_kind != info.class_kind) continue;
        for (auto& r : reports_for(c, spec))
            if (r.functional == info.functionals.front()) out.push_back(std::move(r));
    }
    return out;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    const auto spec = parse_phi(o.phi);
    std::vector<Claim> claims = parse_claims(o.claims);
    bool explicit_claims = !claims.empty() && !o.all;
    if (!explicit_claims) claims.assign(theorem_claims.begin(), theorem_claims.end());
    for (Claim c : claims)
        if (!is_theorem(c)) throw usage_error(std::string("verify takes theorem claims (T1..T6), got ") + to_string(c));

    nlohmann::json records = nlohmann::json::array();
    bool any_violation = false, any_gate_failed = false;
    for (Claim c : claims) {
        const auto report = bound_theorem(c, spec.phi);
        if (!report.hypotheses_ok) {
            any_gate_failed = any_gate_failed || explicit_claims;
            if (explicit_claims) records.push_back({{"claim_id", to_string(c)}, {"phi", spec.text}, {"skipped", "hypotheses fail"}, {"gates", report.gates}});
            continue;
        }
        const auto r = search_supremum(c, spec.phi, o.budget, o.seed);
        any_violation = any_violation || r.violation;
        nlohmann::json rec = r;
        rec["attainment"] = std::abs(evaluate(claim_functional(c), extremal_member(claim_info(c).class_kind, spec.phi)));
        nlohmann::json cors = nlohmann::json::array();
        for (const auto& cr : matching_corollaries(c, spec))
            cors.push_back({{"claim_id", to_string(cr.claim)},
                            {"hypotheses_ok", cr.hypotheses_ok},
                            {"bound", cr.bound ? nlohmann::json(*cr.bound) : nlohmann::json(nullptr)}});
        rec["corollaries"] = cors;
        records.push_back(std::move(rec));
    }

    std::ostringstream os;
    if (o.format == "json") {
        os << records.dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "claim_id,phi,empirical_sup,theoretical_bound,gap,violation,seed\n";
        for (const auto& r : records) {
            if (r.contains("skipped")) continue;
            os << r["claim_id"].get<std::string>() << ',' << r["phi"].get<std::string>() << ','
               << detail::fmt(r["empirical_sup"].get<double>()) << ',' << detail::fmt(r["theoretical_bound"].get<double>())
               << ',' << detail::fmt(r["attainment_gap"].get<double>()) << ',' << (r["violation"].get<bool>() ? "true" : "false")
               << ',' << r["seed"].get<std::uint64_t>() << '\n';
        }
    } else {
        for (const auto& r : records) {
            if (r.contains("skipped")) {
                os << r["claim_id"].get<std::string>() << ": skipped, hypotheses fail\n";
                continue;
            }
            os << r["claim_id"].get<std::string>() << ' ' << r["phi"].get<std::string>() << ": sup "
               << detail::fmt(r["empirical_sup"].get<double>()) << " / bound " << detail::fmt(r["theoretical_bound"].get<double>())
               << (r["violation"].get<bool>() ? "  VIOLATION" : "") << '\n';
        }
    }
    write_output(o.output, os.str(), out);
    if (any_violation) return static_cast<int>(Exit::violation);
    return static_cast<int>(any_gate_failed ? Exit::gate_failed : Exit::ok);
}

inline int cmd_extremal(const Options& o, std::ostream& out) {
    const auto spec = parse_phi(o.phi);
    if (o.kind != "starlike" && o.kind != "convex") throw usage_error("--kind must be starlike or convex");
    if (o.order < 2) throw usage_error("--order must be >= 2");
    const auto kind = o.kind == "starlike" ? ClassKind::starlike : ClassKind::convex;
    const auto m = extremal_member(kind, spec.phi, std::max<std::size_t>(o.order, 4));
    const auto f = m.f.truncated(o.order);
    const auto gamma = log_coefficients(f, o.order - 1);

    std::ostringstream os;
    if (o.format == "json") {
        nlohmann::json a = nlohmann::json::array(), g = nlohmann::json::array();
        for (std::size_t n = 2; n <= o.order; ++n) a.push_back({{"n", n}, {"re", f[n].real()}, {"im", f[n].imag()}});
        for (std::size_t n = 1; n < o.order; ++n)
            g.push_back({{"n", n}, {"re", gamma[n - 1].real()}, {"im", gamma[n - 1].imag()}});
        os << nlohmann::json{{"phi", spec.text}, {"kind", o.kind}, {"order", o.order}, {"a", a}, {"gamma", g}}.dump(2)
           << '\n';
    } else {
        const bool csv = o.format == "csv";
        if (csv) os << "coefficient,n,re,im\n";
        const auto row = [&](const char* name, std::size_t n, complex v) {
            if (csv) os << name << ',' << n << ',' << detail::fmt(v.real()) << ',' << detail::fmt(v.imag()) << '\n';
            else os << name << n << " = " << detail::fmt(v.real()) << (v.imag() < 0 ? " - " : " + ")
                    << detail::fmt(std::abs(v.imag())) << "i\n";
        };
        for (std::size_t n = 2; n <= o.order; ++n) row("a", n, f[n]);
        for (std::size_t n = 1; n < o.order; ++n) row("gamma", n, gamma[n - 1]);
    }
    write_output(o.output, os.str(), out);
    return static_cast<int>(Exit::ok);
}

struct TableRow {
    std::string claim_id;
    std::string family;
    std::string param;
    bool gate_ok;
    std::optional<double> bound;
    std::optional<double> attainment;
    std::optional<double> empirical_sup;
    std::optional<double> gap;
    std::uint64_t seed;
};

/// Rows reproducing every closed-form constant of the corollaries, with
/// extremal attainment and a seeded search for each gated row.
inline std::vector<TableRow> build_table(const SearchBudget& budget, std::uint64_t seed) {
    struct Point {
        Family family;
        std::string label;
        double t;
        MindaPhi phi;
    };
    std::vector<Point> points;
    for (auto [label, t] : std::vector<std::pair<std::string, double>>{
             {"0", 0.0}, {"0.1", 0.1}, {"1/7", 1.0 / 7.0}, {"0.25", 0.25}, {"0.5", 0.5}})
        points.push_back({Family::alpha, label, t, MindaPhi::order_alpha(t)});
    for (auto [label, t] : std::vector<std::pair<std::string, double>>{
             {"0.75", 0.75}, {"8/9", 8.0 / 9.0}, {"0.9", 0.9}, {"1", 1.0}})
        points.push_back({Family::beta, label, t, MindaPhi::power(t)});
    for (auto [label, t] : std::vector<std::pair<std::string, double>>{{"5/14", 5.0 / 14.0}, {"0.4", 0.4}, {"0.5", 0.5}})
        points.push_back({Family::lambda, label, t, MindaPhi::robertson(t)});

    std::map<std::tuple<Claim, int, std::string>, SearchResult> searches;
    const auto search = [&](Claim theorem, const Point& p) -> const SearchResult& {
        const auto key = std::make_tuple(theorem, static_cast<int>(p.family), p.label);
        auto it = searches.find(key);
        if (it == searches.end()) it = searches.emplace(key, search_supremum(theorem, p.phi, budget, seed)).first;
        return it->second;
    };

    std::vector<TableRow> rows;
    const auto push = [&](std::string id, const Point& p, const BoundReport& rep, Claim theorem) {
        TableRow row{std::move(id), to_string(p.family), p.label, rep.hypotheses_ok, rep.bound, {}, {}, {}, seed};
        if (rep.hypotheses_ok) {
            const auto m = extremal_member(claim_info(theorem).class_kind, p.phi);
            row.attainment = std::abs(evaluate(claim_info(theorem).functionals.front(), m));
            const auto& s = search(theorem, p);
            row.empirical_sup = s.empirical_sup;
            row.gap = *rep.bound - s.empirical_sup;
        }
        rows.push_back(std::move(row));
    };

    for (Claim c : theorem_claims)
        for (const auto& p : points) push(to_string(c), p, bound_theorem(c, p.phi), c);

    for (const auto& p : points) {
        std::vector<Claim> cors;
        if (p.family == Family::alpha) cors = {Claim::C6, Claim::C7};
        if (p.family == Family::beta) cors = {Claim::SSb, Claim::CCb};
        if (p.family == Family::lambda) cors = {Claim::Crlr};
        for (Claim c : cors)
            for (Functional f : claim_info(c).functionals)
                push(std::string(to_string(c)) + ":" + to_string(f), p, bound_corollary(c, f, p.t),
                     theorem_for(f, claim_info(c).class_kind));
    }
    const Point sc{Family::fixed, "-", 0.0, MindaPhi::janowski(1.0, -1.0)};
    for (Claim c : {Claim::CS, Claim::CC})
        for (Functional f : claim_info(c).functionals)
            push(std::string(to_string(c)) + ":" + to_string(f), sc, bound_corollary(c, f),
                 theorem_for(f, claim_info(c).class_kind));

    const std::vector<std::pair<double, double>> janowski_points{{1.0, -1.0}, {1.0, -0.5}, {0.5, -1.0}, {0.0, -1.0}};
    for (auto [a, b] : janowski_points) {
        const Point p{Family::janowski, "(" + detail::fmt(a) + ";" + detail::fmt(b) + ")", 0.0, MindaPhi::janowski(a, b)};
        for (Claim c : {Claim::C1i, Claim::C1ii, Claim::C2i, Claim::C2ii, Claim::C4, Claim::C5})
            push(to_string(c), p, bound_janowski(c, a, b),
                 theorem_for(claim_info(c).functionals.front(), claim_info(c).class_kind));
    }
    return rows;
}

inline std::string render_table(const std::vector<TableRow>& rows, const std::string& format) {
    std::ostringstream os;
    const auto opt = [](const std::optional<double>& v) { return v ? detail::fmt(*v) : std::string(); };
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        const auto jopt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
        for (const auto& r : rows)
            arr.push_back({{"claim_id", r.claim_id},
                           {"family", r.family},
                           {"param", r.param},
                           {"gate_ok", r.gate_ok},
                           {"bound", jopt(r.bound)},
                           {"attainment", jopt(r.attainment)},
                           {"empirical_sup", jopt(r.empirical_sup)},
                           {"gap", jopt(r.gap)},
                           {"seed", r.seed}});
        os << arr.dump(2) << '\n';
    } else {
        os << "claim_id,family,param,gate_ok,bound,attainment,empirical_sup,gap,seed\n";
        for (const auto& r : rows)
            os << r.claim_id << ',' << r.family << ',' << r.param << ',' << (r.gate_ok ? "true" : "false") << ','
               << opt(r.bound) << ',' << opt(r.attainment) << ',' << opt(r.empirical_sup) << ',' << opt(r.gap) << ','
               << r.seed << '\n';
    }
    return os.str();
}

inline int cmd_table(const Options& o, std::ostream& out) {
    const auto rows = build_table(o.budget, o.seed);
    write_output(o.output, render_table(rows, o.format == "json" ? "json" : "csv"), out);
    return static_cast<int>(Exit::ok);
}

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("GFT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw usage_error("GFT_SEED is not an unsigned integer");
        }
    }
    return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Bounds and sharpness checks for Toeplitz determinants of Ma-Minda starlike and convex functions",
                 "gft"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"json", "csv", "text"};

    auto* bound = app.add_subcommand("bound", "evaluate theorem/corollary bounds with their hypothesis gates");
    auto* verify = app.add_subcommand("verify", "search for the supremum of each bounded functional");
    auto* extremal = app.add_subcommand("extremal", "coefficients of the extremal function k_phi or h_phi");
    auto* table = app.add_subcommand("table", "corollary reproduction table");

    std::optional<std::uint64_t> seed;
    for (auto* sub : {bound, verify, extremal})
        sub->add_option("--phi", o.phi, "janowski:A,B | alpha:a | beta:b | lambda:l | custom:B1,B2,B3[,..]")
            ->required();
    for (auto* sub : {bound, verify}) {
        sub->add_option("--claim", o.claims, "claim id (repeatable)");
        sub->add_flag("--all", o.all, "every applicable claim");
    }
    for (auto* sub : {verify, table}) {
        sub->add_option("--samples", o.budget.samples, "random samples per search");
        sub->add_option("--refine-steps", o.budget.refine_steps, "simplex iterations per start");
        sub->add_option("--starts", o.budget.starts, "refinement starts");
        sub->add_option("--threads", o.budget.threads, "worker threads (0 = auto)");
        sub->add_option("--seed", seed, "RNG seed (default $GFT_SEED or 0)");
    }
    extremal->add_option("--kind", o.kind, "starlike | convex")->check(CLI::IsMember({"starlike", "convex"}));
    extremal->add_option("--order", o.order, "truncation order");
    for (auto* sub : {bound, verify, extremal, table}) {
        sub->add_option("--format", o.format, "json | csv | text")->check(CLI::IsMember(formats));
        sub->add_option("--output", o.output, "write to file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(Exit::malformed);
    }

    try {
        o.seed = seed ? *seed : default_seed();
        if (bound->parsed()) return cmd_bound(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out);
        if (extremal->parsed()) return cmd_extremal(o, out);
        if (table->parsed()) return cmd_table(o, out);
    } catch (const usage_error& e) {
        err << "gft: " << e.what() << '\n';
        return static_cast<int>(Exit::malformed);
    } catch (const gft::error& e) {
        err << "gft: " << e.what() << '\n';
        return static_cast<int>(Exit::malformed);
    }
    return static_cast<int>(Exit::malformed);
}

} // namespace gft::cli
