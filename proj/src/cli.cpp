#include "wgreedy/cli.hpp"

#include "wgreedy/constants.hpp"
#include "wgreedy/json_io.hpp"
#include "wgreedy/oracles.hpp"
#include "wgreedy/parallel.hpp"
#include "wgreedy/spaces.hpp"
#include "wgreedy/tga.hpp"
#include "wgreedy/theorems.hpp"
#include "wgreedy/weights.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace wgreedy {

namespace {

// Input problems (bad names, unreadable files, malformed JSON) exit with 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string full(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        switch (c) {
            case '<': o += "&lt;"; break;
            case '>': o += "&gt;"; break;
            case '&': o += "&amp;"; break;
            case '"': o += "&quot;"; break;
            default: o += c;
        }
    }
    return o;
}

void write_file(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw UsageError("cannot write " + p.string());
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

NormSpace space_or_usage(const std::string& name) {
    try {
        return parse_space(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

SetWeight weight_or_usage(const std::string& name) {
    try {
        return parse_weight(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
}

struct Common {
    std::string invocation;
    std::uint64_t seed = 0;
    std::string out = ".";
};

Json header(const Common& c, const std::string& command) {
    return Json{{"command", command}, {"invocation", c.invocation}, {"seed", c.seed}};
}

// ---- tga-run ----

struct TgaArgs {
    std::string space = "l1", weight = "card", input;
    std::int64_t m = 0;
    bool all_sets = false;
};

int cmd_tga_run(const TgaArgs& a, const Common& c, std::ostream& out) {
    const NormSpace space = space_or_usage(a.space);
    const SetWeight w = weight_or_usage(a.weight);
    SparseVector x;
    try {
        x = parse_vector(read_file(a.input));
    } catch (const std::invalid_argument& e) {
        throw UsageError(a.input + ": " + e.what());
    }
    std::vector<GreedySelection> sets;
    try {
        sets = greedy_sets(x, a.m, a.all_sets ? GreedyMode::all : GreedyMode::one_deterministic);
    } catch (const std::out_of_range& e) {
        throw UsageError(std::string("m out of range: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("m out of range: ") + e.what());
    }
    const std::uint64_t m = static_cast<std::uint64_t>(a.m);
    Json branches = Json::array();
    for (const auto& g : sets) {
        const SparseVector gm = greedy_sum(x, g);
        const ChebyshevResult cg = chebyshev_sum(space, x, g.set);
        Json b = to_json(g);
        b["greedy_sum"] = to_json(gm);
        b["greedy_residual"] = number_json(space.norm(x - gm));
        b["chebyshev"] = to_json(cg);
        branches.push_back(b);
    }
    const IndexSet lam = greedy_sets(x, a.m, GreedyMode::one_deterministic).front().set;
    OracleOptions oo;
    IndexSet kdom = x.support().unite(lam);
    const Index kmax = kdom.empty() ? Index(1) : kdom.max();
    Json oracles{{"sigma_m", to_json(sigma_m(space, x, m, oo))},
                 {"sigma_tilde_m", to_json(sigma_tilde_m(space, x, m, oo))},
                 {"sigma_omega", to_json(sigma_omega(space, w, x, lam, oo))},
                 {"sigma_tilde_omega", to_json(sigma_tilde_omega(space, w, x, lam, oo))},
                 {"sigma_bar_omega", to_json(sigma_bar_omega(space, w, x, lam, kmax, oo))}};
    Json j = header(c, "tga-run");
    j["space"] = space.name();
    j["weight"] = w.name();
    j["input"] = to_json(x);
    j["norm"] = number_json(space.norm(x));
    j["m"] = a.m;
    j["greedy_set"] = to_json(lam);
    j["branches"] = branches;
    j["oracles_on_greedy_set"] = oracles;
    const fs::path path = fs::path(c.out) / "tga-run.json";
    write_file(path, dump(j));
    out << "norm " << full(space.norm(x)) << ", greedy set " << lam.to_string() << ", " << branches.size()
        << " branch(es)\n";
    for (const auto& [k, v] : oracles.items()) out << k << " = " << v["value"].dump() << "\n";
    out << "wrote " << path.string() << "\n";
    return 0;
}

// ---- constants ----

struct ConstantsArgs {
    std::string space = "l1", weight = "card";
    std::size_t dim = 6, family_size = 60;
};

int cmd_constants(const ConstantsArgs& a, const Common& c, std::ostream& out) {
    const NormSpace space = space_or_usage(a.space);
    const SetWeight w = weight_or_usage(a.weight);
    const FamilyConfig f = default_family(space, a.dim, c.seed, a.family_size);
    using Est = std::function<ConstantEstimate()>;
    const std::vector<Est> runs{
        [&] { return estimate_K_s(space, f); },
        [&] { return estimate_K_u(space, f); },
        [&] { return estimate_K_b(space, f); },
        [&] { return estimate_C_l(space, f); },
        [&] { return estimate_property_A(space, w, f); },
        [&] { return estimate_disjoint_superdemocracy(space, w, f, true, false); },
        [&] { return estimate_disjoint_superdemocracy(space, w, f, true, true); },
        [&] { return estimate_disjoint_superdemocracy(space, w, f, false, false); },
        [&] { return estimate_disjoint_superdemocracy(space, w, f, false, true); },
        [&] { return estimate_conservative_variants(space, w, f, false); },
        [&] { return estimate_conservative_variants(space, w, f, true); },
        [&] { return estimate_pslc(space, w, f); },
        [&] { return estimate_greedy_type_constants(space, w, f, GreedyType::g); },
        [&] { return estimate_greedy_type_constants(space, w, f, GreedyType::al); },
        [&] { return estimate_greedy_type_constants(space, w, f, GreedyType::s); },
        [&] { return estimate_greedy_type_constants(space, w, f, GreedyType::p); },
    };
    Json arr = Json::array();
    std::string csv = "# " + c.invocation + "\n# seed " + std::to_string(c.seed) + "\nname,lower_bound,certified,kind\n";
    for (const auto& run : runs) {
        ConstantEstimate e;
        try {
            e = run();
        } catch (const UnboundedRatio& u) {
            e.name = u.constant();
            e.lower_bound = std::numeric_limits<double>::infinity();
            e.witness = u.witness();
            e.family = "unbounded on the family";
            e.seed = c.seed;
        }
        arr.push_back(to_json(e));
        csv += e.name + "," + full(e.lower_bound) + "," + (e.certified ? full(e.certified->value) : "") + "," +
               (e.certified ? e.certified->kind : "") + "\n";
    }
    Json j = header(c, "constants");
    j["space"] = space.name();
    j["weight"] = w.name();
    j["dim"] = a.dim;
    j["family_size"] = a.family_size;
    j["estimates"] = arr;
    const fs::path jp = fs::path(c.out) / "constants.json";
    const fs::path cp = fs::path(c.out) / "constants.csv";
    write_file(jp, dump(j));
    write_file(cp, csv);
    out << csv.substr(csv.find("name,")) << "wrote " << jp.string() << " and " << cp.string() << "\n";
    return 0;
}

// ---- plots ----

std::vector<Series> democracy_series(const std::vector<unsigned>& ns) {
    Series r{"ratio", "#1f5fbf", {}}, ref{"sqrt(N)/ln(N)", "#c04020", {}};
    for (unsigned n : ns) {
        r.points.emplace_back(n, democracy_ratio(n));
        if (n >= 2) ref.points.emplace_back(n, std::sqrt(double(n)) / std::log(double(n)));
    }
    return {r, ref};
}

std::string democracy_csv(const Common& c, const std::vector<unsigned>& ns) {
    std::string csv = "# " + c.invocation + "\n# seed " + std::to_string(c.seed) + "\nN,ratio,sqrtN_over_lnN\n";
    for (unsigned n : ns)
        csv += std::to_string(n) + "," + full(democracy_ratio(n)) + "," +
               full(std::sqrt(double(n)) / std::log(double(n))) + "\n";
    return csv;
}

struct PlotArgs {
    int n_max = 100;
};

int cmd_plot_democracy(const PlotArgs& a, const Common& c, std::ostream& out) {
    if (a.n_max < 2) throw UsageError("--n-max must be at least 2");
    std::vector<unsigned> ns;
    for (int n = 2; n <= a.n_max; ++n) ns.push_back(static_cast<unsigned>(n));
    const fs::path sp = fs::path(c.out) / "democracy.svg";
    const fs::path cp = fs::path(c.out) / "democracy.csv";
    std::string svg = line_chart_svg("||1_{2..2^N}|| / ||1_{3..3^N}||", "N", democracy_series(ns));
    svg.insert(svg.find('\n') + 1, "<!-- " + xml_escape(c.invocation) + " seed " + std::to_string(c.seed) + " -->\n");
    write_file(sp, svg);
    write_file(cp, democracy_csv(c, ns));
    out << "r(" << a.n_max << ") = " << full(democracy_ratio(static_cast<unsigned>(a.n_max))) << "\nwrote "
        << sp.string() << " and " << cp.string() << "\n";
    return 0;
}

// ---- check ----

struct CheckArgs {
    std::string suite = "all", space, weight = "card";
    SuiteOptions opts;
};

struct Combo {
    std::string space, weight;
};

std::vector<std::pair<std::string, Combo>> catalog_runs() {
    std::vector<std::pair<std::string, Combo>> runs;
    const std::vector<Combo> combos{{"l1", "card"}, {"l2", "card"}, {"linf", "card"}, {"m3", "norm:m3"}};
    for (const auto& e : suite_catalog()) {
        if (!e.needs_space) {
            runs.push_back({e.name, {"m3", "-"}});
            continue;
        }
        for (const auto& cb : combos) {
            if (!e.needs_weight && cb.weight != "card" && cb.space != "m3") continue;
            runs.push_back({e.name, e.needs_weight ? cb : Combo{cb.space, "norm:" + cb.space}});
        }
        if (e.name == "semi-greedy-necessity") {
            runs.push_back({e.name, {"linf", "seq:geom:0.5"}});
            runs.push_back({e.name, {"l1", "seq:geom:0.5"}});
        }
    }
    return runs;
}

int cmd_check(const CheckArgs& a, const Common& c, std::ostream& out) {
    SuiteOptions o = a.opts;
    o.seed = c.seed;
    std::vector<std::pair<std::string, Combo>> runs;
    if (a.suite == "all") {
        if (a.space.empty()) {
            runs = catalog_runs();
        } else {
            for (const auto& e : suite_catalog()) runs.push_back({e.name, {a.space, a.weight}});
        }
    } else {
        std::string name;
        try {
            name = resolve_suite(a.suite);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        bool needs_space = true;
        for (const auto& e : suite_catalog())
            if (e.name == name) needs_space = e.needs_space;
        if (needs_space && a.space.empty()) throw UsageError("--space is required for suite " + name);
        runs.push_back({name, {needs_space ? a.space : "m3", a.weight}});
    }

    Json reports = Json::array();
    Json summary = Json::array();
    bool all_ok = true;
    const SuiteReport* counter = nullptr;
    std::vector<SuiteReport> kept;
    kept.reserve(runs.size());
    for (const auto& [name, cb] : runs) {
        const NormSpace space = space_or_usage(cb.space);
        const SetWeight w = cb.weight == "-" ? SetWeight::cardinality() : weight_or_usage(cb.weight);
        kept.push_back(run_suite(name, space, w, o));
        const SuiteReport& r = kept.back();
        if (r.suite == "counterexample") counter = &r;
        all_ok = all_ok && r.ok();
        reports.push_back(to_json(r));
        std::size_t fired = 0;
        for (const auto& ctl : r.negative_controls) fired += ctl.fired() ? 1 : 0;
        summary.push_back(Json{{"suite", r.suite}, {"space", r.space}, {"weight", r.weight},
                               {"status", to_string(r.status)}, {"ok", r.ok()}, {"checks", r.checks},
                               {"violations", r.violation_count},
                               {"negative_controls_fired", std::to_string(fired) + "/" +
                                                               std::to_string(r.negative_controls.size())}});
        char line[256];
        std::snprintf(line, sizeof line, "%-32s %-7s %-14s %-9s checks=%zu violations=%zu controls=%zu/%zu\n",
                      r.suite.c_str(), r.space.c_str(), r.weight.c_str(), to_string(r.status).c_str(), r.checks,
                      r.violation_count, fired, r.negative_controls.size());
        out << line;
        for (const auto& v : r.violations)
            out << "    instance " << v.instance << ": " << v.step << " lhs=" << full(v.lhs) << " rhs=" << full(v.rhs)
                << " " << v.detail << "\n";
    }
    Json j = header(c, "check");
    j["ok"] = all_ok;
    j["summary"] = summary;
    j["reports"] = reports;
    const fs::path jp = fs::path(c.out) / "check.json";
    write_file(jp, dump(j));
    out << "wrote " << jp.string() << "\n";
    if (counter && !counter->tables.empty()) {
        std::vector<unsigned> ns;
        for (const auto& row : counter->tables.front().rows) ns.push_back(static_cast<unsigned>(row[0]));
        std::string svg = line_chart_svg("||1_{2..2^N}|| / ||1_{3..3^N}||", "N", democracy_series(ns));
        svg.insert(svg.find('\n') + 1, "<!-- " + xml_escape(c.invocation) + " seed " + std::to_string(c.seed) + " -->\n");
        write_file(fs::path(c.out) / "counterexample.svg", svg);
        write_file(fs::path(c.out) / "counterexample.csv", democracy_csv(c, ns));
        out << "wrote " << (fs::path(c.out) / "counterexample.svg").string() << "\n";
    }
    out << (all_ok ? "all suites ok\n" : "violations found\n");
    return all_ok ? 0 : 1;
}

}  // namespace

std::string line_chart_svg(const std::string& title, const std::string& x_label, const std::vector<Series>& series) {
    const double W = 640, H = 400, L = 60, R = 20, T = 40, B = 50;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = 0.0, y1 = -x0;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y1 = std::max(y1, y);
        }
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) y1 = y0 + 1.0;
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
    s += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
    s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
         xml_escape(title) + "</text>\n";
    s += "<line x1=\"" + fixed(L, 1) + "\" y1=\"" + fixed(H - B, 1) + "\" x2=\"" + fixed(W - R, 1) + "\" y2=\"" +
         fixed(H - B, 1) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fixed(L, 1) + "\" y1=\"" + fixed(T, 1) + "\" x2=\"" + fixed(L, 1) + "\" y2=\"" +
         fixed(H - B, 1) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x0 + (x1 - x0) * i / 4.0, yv = y0 + (y1 - y0) * i / 4.0;
        s += "<text x=\"" + fixed(px(xv), 1) + "\" y=\"" + fixed(H - B + 18, 1) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + fixed(xv, 0) + "</text>\n";
        s += "<text x=\"" + fixed(L - 6, 1) + "\" y=\"" + fixed(py(yv) + 4, 1) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fixed(yv, 2) + "</text>\n";
    }
    s += "<text x=\"" + fixed((L + W - R) / 2, 1) + "\" y=\"" + fixed(H - 12, 1) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + xml_escape(x_label) + "</text>\n";
    double ly = T + 10;
    for (const auto& se : series) {
        std::string pts;
        for (const auto& [x, y] : se.points) pts += (pts.empty() ? "" : " ") + fixed(px(x), 2) + "," + fixed(py(y), 2);
        s += "<polyline fill=\"none\" stroke=\"" + se.color + "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        s += "<text x=\"" + fixed(L + 12, 1) + "\" y=\"" + fixed(ly, 1) + "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" +
             se.color + "\">" + xml_escape(se.label) + "</text>\n";
        ly += 16;
    }
    s += "</svg>\n";
    return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted greedy approximation laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    unsigned workers = 0;
    app.add_option("--workers", workers, "worker threads (0 = hardware); results do not depend on it");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "seed for every random family");
        sub->add_option("--out", common.out, "output directory");
    };

    TgaArgs tga;
    auto* t = app.add_subcommand("tga-run", "greedy sets, greedy and Chebyshev sums, oracle values for one vector");
    t->add_option("--space", tga.space);
    t->add_option("--weight", tga.weight);
    t->add_option("--input", tga.input, "vector JSON file")->required();
    t->add_option("--m", tga.m)->required();
    t->add_flag("--all-greedy-sets", tga.all_sets);
    add_common(t);

    ConstantsArgs ca;
    auto* k = app.add_subcommand("constants", "lower-bound estimates and certified values of every constant");
    k->add_option("--space", ca.space);
    k->add_option("--weight", ca.weight);
    k->add_option("--dim", ca.dim)->check(CLI::Range(1, 64));
    k->add_option("--family-size", ca.family_size)->check(CLI::Range(1, 100000));
    add_common(k);

    CheckArgs ch;
    std::string n_list;
    auto* c = app.add_subcommand("check", "run property suites");
    c->add_option("--suite", ch.suite, "suite name or alias, or all");
    c->add_option("--space", ch.space);
    c->add_option("--weight", ch.weight);
    c->add_option("--dim", ch.opts.dim)->check(CLI::Range(1, 12));
    c->add_option("--tol", ch.opts.tol);
    c->add_option("--vectors", ch.opts.vectors);
    c->add_option("--tuples", ch.opts.tuples);
    c->add_option("--n-list", n_list, "comma-separated N values for the counterexample");
    add_common(c);

    PlotArgs pa;
    auto* p = app.add_subcommand("plot-democracy", "SVG and CSV of the democracy ratio against N");
    p->add_option("--n-max", pa.n_max)->required();
    add_common(p);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    // the invocation recorded in outputs omits --workers, which never changes results
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--workers") {
            ++i;
            continue;
        }
        if (args[i].starts_with("--workers=")) continue;
        common.invocation += (common.invocation.empty() ? "wgreedy " : " ") + args[i];
    }
    if (common.invocation.empty()) common.invocation = "wgreedy";
    set_default_workers(workers);
    try {
        if (*t) return cmd_tga_run(tga, common, out);
        if (*k) return cmd_constants(ca, common, out);
        if (*p) return cmd_plot_democracy(pa, common, out);
        if (!n_list.empty()) {
            ch.opts.n_list.clear();
            std::stringstream ss(n_list);
            for (std::string tok; std::getline(ss, tok, ',');) {
                try {
                    std::size_t used = 0;
                    const unsigned long v = std::stoul(tok, &used);
                    if (used != tok.size() || v == 0) throw std::invalid_argument(tok);
                    ch.opts.n_list.push_back(static_cast<unsigned>(v));
                } catch (const std::exception&) {
                    throw UsageError("bad --n-list entry '" + tok + "'");
                }
            }
        }
        return cmd_check(ch, common, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace wgreedy
