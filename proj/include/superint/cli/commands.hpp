#pragma once

// Batch front end. `run` parses a command line (optionally merged with a
// JSON config file whose keys are the long flag names; flags win), runs one
// subcommand and returns its exit code: 0 success, 1 verification or
// integration failure, 2 usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superint/cas/models.hpp"
#include "superint/cas/repair.hpp"
#include "superint/cas/suites.hpp"
#include "superint/crosscheck.hpp"
#include "superint/orbits.hpp"
#include "superint/verify.hpp"

namespace superint::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// A configuration problem detected before any computation.
struct UsageError : Error {
    using Error::Error;
};

struct RunConfig {
    std::string family = "ttw";
    std::string k;
    std::string a = "1", b = "0", c = "0";
    std::string chart = "cartesian";
    std::string start = "0.8,0.3,0.2,-0.1";
    std::string integrator = "rk4";
    double dt = 1e-3;
    long steps = 1000;
    bool constants = false;
    std::string out;
    // verify-constants
    int points = 100;
    std::uint64_t seed = 1;
    double pair_tol = 1e-10, purity_tol = 1e-10, bracket_tol = 1e-9, drift_tol = 1e-6;
    double drift_horizon = 10.0, drift_dt = 1e-4;
    bool no_drift = false;
    int corrupt_normalizer = 0;
    // verify-algebra
    std::string suite;
    std::vector<long> suite_args;
    // scan-orbits
    std::string k_list;
    int starts = 5;
    double horizon = 50.0, tol = 1e-4;
    // repair
    std::string target;
};

// ---------------------------------------------------------------------------
// parsing helpers

inline double parse_real(std::string_view s, const std::string& what) {
    std::string t(s);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw UsageError("bad number for " + what + ": '" + t + "'");
    }
    if (used != t.size()) throw UsageError("bad number for " + what + ": '" + t + "'");
    return v;
}

/// Accepts "x", "yi", "x+yi", "x-yi", "i", "-i".
inline cd parse_complex(std::string_view text, const std::string& what = "complex value") {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.empty()) throw UsageError("empty " + what);
    if (s.back() != 'i') return {parse_real(s, what), 0.0};
    s.pop_back();
    // split at the last sign that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t j = s.size(); j-- > 1;)
        if ((s[j] == '+' || s[j] == '-') && s[j - 1] != 'e' && s[j - 1] != 'E') {
            split = j;
            break;
        }
    std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    double imv = (im.empty() || im == "+") ? 1.0 : (im == "-" ? -1.0 : parse_real(im, what));
    return {re.empty() ? 0.0 : parse_real(re, what), imv};
}

inline Chart parse_chart(const std::string& s) {
    if (s == "cartesian") return Chart::cartesian;
    if (s == "polar") return Chart::polar;
    if (s == "logpolar") return Chart::logpolar;
    throw UsageError("unknown chart '" + s + "' (cartesian, polar, logpolar)");
}

inline std::string chart_name(Chart c) {
    switch (c) {
        case Chart::cartesian: return "cartesian";
        case Chart::polar: return "polar";
        case Chart::logpolar: return "logpolar";
    }
    return "?";
}

inline std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

inline Point parse_start(const std::string& s, Chart chart) {
    auto parts = split_list(s);
    if (parts.size() != 4) throw UsageError("--start needs four comma-separated values q1,q2,p1,p2");
    return {chart, {parse_complex(parts[0], "start"), parse_complex(parts[1], "start"), parse_complex(parts[2], "start"),
                    parse_complex(parts[3], "start")}};
}

inline RationalIndex parse_index(const std::string& s) {
    if (s.empty()) throw UsageError("--k is required, as P/Q");
    try {
        return RationalIndex::parse(s);
    } catch (const ParseError& e) {
        throw UsageError(std::string(e.what()) + " (k must be entered as P/Q)");
    }
}

inline LadderSystem make_system(const RunConfig& cfg) {
    RationalIndex k = parse_index(cfg.k);
    if (cfg.family == "ttw")
        return LadderSystem::make_ttw(ParamsTTW::polar(parse_complex(cfg.a, "--a"), parse_complex(cfg.b, "--b"),
                                                       parse_complex(cfg.c, "--c")),
                                      k);
    if (cfg.family == "holo") return LadderSystem::make_holo(ParamsHolo{parse_complex(cfg.a, "--a")}, k);
    throw UsageError("unknown family '" + cfg.family + "' (ttw, holo)");
}

// ---------------------------------------------------------------------------
// output helpers

inline json report_json(const VerificationReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["version"] = rep.version;
    json conv = json::object();
    for (const auto& [k, v] : rep.conventions) conv[k] = v;
    j["conventions"] = conv;
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"residual", c.residual}});
    j["checks"] = checks;
    return j;
}

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Writes `text` to `path`, or to `out` when path is empty.
inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + path + "'");
    f << text;
}

// ---------------------------------------------------------------------------
// commands

inline int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    LadderSystem sys = make_system(cfg);
    Chart chart = parse_chart(cfg.chart);
    Point start = parse_start(cfg.start, chart);
    if (!(cfg.dt > 0.0)) throw UsageError("--dt must be positive");
    if (cfg.steps < 0) throw UsageError("--steps must be non-negative");
    bool leapfrog = cfg.integrator == "leapfrog";
    if (!leapfrog && cfg.integrator != "rk4") throw UsageError("unknown integrator '" + cfg.integrator + "' (rk4, leapfrog)");
    if (leapfrog && (sys.family != Family::ttw || chart != Chart::cartesian))
        throw UsageError("leapfrog needs a TTW system and a Cartesian start");
    if (leapfrog)
        for (const auto& v : start.z)
            if (v.imag() != 0.0) throw UsageError("leapfrog needs a real start point");

    Observable h = sys.hamiltonian();
    Observable sep = sys.separation_constant();
    std::vector<Observable> extra;
    if (cfg.constants) {
        extra.push_back(ladder_constant(sys, true));
        extra.push_back(ladder_constant(sys, false));
    }
    Trajectory tr = leapfrog ? integrate_leapfrog(h, start, cfg.dt, cfg.steps) : integrate_rk4(h, start, cfg.dt, cfg.steps);

    bool complex_coords = sys.family == Family::holo;
    std::string sep_label = sys.family == Family::ttw ? "L2" : "L";
    std::ostringstream csv;
    csv << "t,chart,q1,q2,p1,p2";
    if (complex_coords) csv << ",q1_im,q2_im,p1_im,p2_im";
    csv << ",H_re,H_im," << sep_label << "_re," << sep_label << "_im";
    for (const auto& o : extra) csv << "," << o.name() << "_re," << o.name() << "_im";
    csv << "\n";
    for (std::size_t n = 0; n < tr.states.size(); ++n) {
        const Point& z = tr.states[n];
        csv << num(tr.times[n]) << "," << chart_name(z.chart);
        for (const auto& v : z.z) csv << "," << num(v.real());
        if (complex_coords)
            for (const auto& v : z.z) csv << "," << num(v.imag());
        auto put = [&](cd v) { csv << "," << num(v.real()) << "," << num(v.imag()); };
        put(h(z));
        put(sep(z));
        for (const auto& o : extra) put(o(z));
        csv << "\n";
    }
    emit(csv.str(), cfg.out, out);
    return kExitOk;
}

inline int cmd_verify_constants(const RunConfig& cfg, std::ostream& out) {
    LadderSystem sys = make_system(cfg);
    if (cfg.points < 1) throw UsageError("--points must be positive");
    ConstantsCheckOptions opt;
    opt.points = cfg.points;
    opt.seed = cfg.seed;
    opt.pair_tol = cfg.pair_tol;
    opt.purity_tol = cfg.purity_tol;
    opt.bracket_tol = cfg.bracket_tol;
    opt.drift_tol = cfg.drift_tol;
    opt.horizon = cfg.drift_horizon;
    opt.dt = cfg.drift_dt;
    opt.drift = !cfg.no_drift;
    opt.normalizer_shift = cfg.corrupt_normalizer;
    VerificationReport rep = verify_constants(sys, opt);
    emit(report_json(rep).dump(2) + "\n", cfg.out, out);
    return rep.ok() ? kExitOk : kExitFailure;
}

inline std::vector<std::string> algebra_suites() {
    return {"ttw-k2-classical", "ttw-k2-quantum", "holo-k3-classical", "holo-k3-quantum", "ttw-general", "models",
            "closed-forms"};
}

/// Accepts "ttw-general(p,q)" or "ttw-general" followed by p and q.
inline VerificationReport run_suite(std::string name, std::vector<long> args) {
    if (auto open = name.find('('); open != std::string::npos && name.back() == ')') {
        for (const auto& part : split_list(name.substr(open + 1, name.size() - open - 2)))
            args.push_back(static_cast<long>(parse_real(part, "suite argument")));
        name = name.substr(0, open);
    }
    if (name == "ttw-general") {
        if (args.size() != 2) throw UsageError("ttw-general needs p and q");
        if (args[0] < 1 || args[1] < 1 || std::gcd(args[0], args[1]) != 1) throw UsageError("ttw-general needs coprime p, q >= 1");
        return cas::suite_ttw_general(args[0], args[1]);
    }
    if (!args.empty()) throw UsageError("suite '" + name + "' takes no arguments");
    if (name == "ttw-k2-classical") return cas::suite_ttw_k2_classical();
    if (name == "ttw-k2-quantum") return cas::suite_quantum_ttw_k2();
    if (name == "holo-k3-classical") return cas::suite_holo_k3_classical();
    if (name == "holo-k3-quantum") return cas::suite_quantum_holo_k3();
    if (name == "models") return cas::suite_models();
    if (name == "closed-forms") return cross_check_closed_forms();
    throw UsageError("unknown suite '" + name + "'");
}

inline int cmd_verify_algebra(const RunConfig& cfg, std::ostream& out) {
    if (cfg.suite.empty()) throw UsageError("verify-algebra needs a suite name");
    VerificationReport rep = run_suite(cfg.suite, cfg.suite_args);
    emit(report_json(rep).dump(2) + "\n", cfg.out, out);
    return rep.ok() ? kExitOk : kExitFailure;
}

struct ScanEntry {
    std::string text;
    double value = 0.0;
    bool rational = false;
};

/// "P/Q" and integers are rational; decimals are accepted as non-rational proxies.
inline std::vector<ScanEntry> parse_k_list(const std::string& s) {
    std::vector<ScanEntry> out;
    for (const auto& part : split_list(s)) {
        if (part.empty()) throw UsageError("empty entry in --k-list");
        ScanEntry e{part};
        if (part.find_first_not_of("0123456789/") == std::string::npos) {
            RationalIndex k = parse_index(part);
            e.value = k.value();
            e.rational = true;
        } else {
            e.value = parse_real(part, "--k-list");
            if (!(e.value > 0.0)) throw UsageError("k must be positive");
        }
        out.push_back(e);
    }
    if (out.empty()) throw UsageError("--k-list is empty");
    return out;
}

/// Seeded polar starts inside the wedge of the largest k.
inline std::vector<Point> scan_starts(int n, double k_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point> out;
    for (int j = 0; j < n; ++j) {
        double r = 0.6 + 0.8 * u(rng);
        double th = pi / (2.0 * k_max) * (0.25 + 0.5 * u(rng));
        double pr = u(rng) - 0.5, pth = u(rng) - 0.5;
        out.push_back(make_point(Chart::polar, r, th, pr, pth));
    }
    return out;
}

inline int cmd_scan_orbits(const RunConfig& cfg, std::ostream& out) {
    auto entries = parse_k_list(cfg.k_list);
    if (cfg.starts < 0) throw UsageError("--starts must be non-negative");
    if (!(cfg.dt > 0.0) || !(cfg.horizon > 0.0) || !(cfg.tol > 0.0)) throw UsageError("--dt, --horizon, --tol must be positive");
    ParamsTTW prm = ParamsTTW::polar(parse_complex(cfg.a, "--a"), parse_complex(cfg.b, "--b"), parse_complex(cfg.c, "--c"));
    std::vector<double> ks;
    double k_max = 0.0;
    for (const auto& e : entries) {
        ks.push_back(e.value);
        k_max = std::max(k_max, e.value);
    }
    auto starts = scan_starts(cfg.starts, k_max, cfg.seed);
    auto cells = scan_k(ks, starts, prm, {cfg.horizon, cfg.dt, cfg.tol});

    json j;
    j["horizon"] = cfg.horizon;
    j["dt"] = cfg.dt;
    j["tol"] = cfg.tol;
    j["params"] = {{"a", {prm.a.real(), prm.a.imag()}}, {"b", {prm.b.real(), prm.b.imag()}}, {"c", {prm.c.real(), prm.c.imag()}}};
    json rows = json::array();
    std::size_t errors = 0;
    for (std::size_t n = 0; n < cells.size(); ++n) {
        const ClosureResult& cell = cells[n];
        const ScanEntry& e = entries[n / starts.size()];  // cells are k-major
        json row;
        row["k"] = e.text;
        row["k_value"] = cell.k;
        row["rational"] = e.rational;
        row["start"] = cell.start_index;
        row["closed"] = cell.closed;
        row["period"] = cell.period ? json(*cell.period) : json(nullptr);
        row["distance"] = std::isfinite(cell.distance) ? json(cell.distance) : json(nullptr);
        row["error"] = cell.error.empty() ? json(nullptr) : json(cell.error);
        errors += !cell.error.empty();
        rows.push_back(row);
    }
    j["cells"] = rows;
    emit(j.dump(2) + "\n", cfg.out, out);
    return 2 * errors > cells.size() ? kExitFailure : kExitOk;
}

inline int cmd_repair(const RunConfig& cfg, std::ostream& out) {
    auto targets = cas::repair_targets();
    if (std::find(targets.begin(), targets.end(), cfg.target) == targets.end())
        throw UsageError("unknown repair target '" + cfg.target + "'");
    cas::RepairResult r = cas::repair(cfg.target);
    bool quantum = cfg.target.find("quantum") != std::string::npos;
    json j;
    j["target"] = r.target;
    j["ansatz"] = r.description;
    j["printed"] = r.printed;
    j["status"] = cas::to_string(r.solution.status);
    json unknowns = json::array();
    for (std::size_t n = 0; n < r.solution.names.size(); ++n)
        unknowns.push_back({{"name", r.solution.names[n]}, {"value", r.solution.values[n].str()}});
    j["unknowns"] = unknowns;
    j["certificate"] = {{"identity", quantum ? "[repaired, H]" : "{repaired, H}"},
                        {"residual", r.solution.certified ? "0 (exact)" : "nonzero"}};
    j["certified"] = r.solution.certified;
    emit(j.dump(2) + "\n", cfg.out, out);
    return r.unique() && r.solution.certified ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// command line

namespace detail {

/// Flattens a JSON config into "--key value" arguments.
inline std::vector<std::string> config_args(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file '" + path + "'");
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    std::vector<std::string> out;
    for (const auto& [key, v] : j.items()) {
        std::string flag = "--" + key;
        if (v.is_boolean()) {
            if (v.get<bool>()) out.push_back(flag);
        } else if (v.is_array()) {
            std::string joined;
            for (const auto& e : v) joined += (joined.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
            out.insert(out.end(), {flag, joined});
        } else if (v.is_string()) {
            out.insert(out.end(), {flag, v.get<std::string>()});
        } else {
            out.insert(out.end(), {flag, v.dump()});
        }
    }
    return out;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Verification engine for superintegrable TTW and holomorphic systems"};
    app.name("superint");
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string config_path;

    auto add_system = [&](CLI::App* sc) {
        sc->add_option("--family", cfg.family, "ttw or holo")->capture_default_str();
        sc->add_option("--a", cfg.a, "alpha (ttw) or a (holo); complex as re+imi")->capture_default_str();
        sc->add_option("--b", cfg.b, "beta (ttw)")->capture_default_str();
        sc->add_option("--c", cfg.c, "gamma (ttw)")->capture_default_str();
    };
    auto add_common = [&](CLI::App* sc) {
        sc->add_option("--config", config_path, "JSON config file; keys are long flag names, flags override");
        sc->add_option("--out", cfg.out, "output path (default stdout)");
    };

    auto* sim = app.add_subcommand("simulate", "integrate a trajectory and write CSV");
    add_system(sim);
    add_common(sim);
    sim->add_option("--k", cfg.k, "index as P/Q")->required();
    sim->add_option("--chart", cfg.chart, "start chart: cartesian, polar, logpolar")->capture_default_str();
    sim->add_option("--start", cfg.start, "q1,q2,p1,p2")->capture_default_str();
    sim->add_option("--dt", cfg.dt)->capture_default_str();
    sim->add_option("--steps", cfg.steps)->capture_default_str();
    sim->add_option("--integrator", cfg.integrator, "rk4 or leapfrog")->capture_default_str();
    sim->add_flag("--constants", cfg.constants, "add the two extracted ladder constants as columns");

    auto* vc = app.add_subcommand("verify-constants", "numeric checks of the ladder constants; JSON report");
    add_system(vc);
    add_common(vc);
    vc->add_option("--k", cfg.k, "index as P/Q")->required();
    vc->add_option("--points", cfg.points)->capture_default_str();
    vc->add_option("--seed", cfg.seed)->capture_default_str();
    vc->add_option("--pair-tol", cfg.pair_tol)->capture_default_str();
    vc->add_option("--purity-tol", cfg.purity_tol)->capture_default_str();
    vc->add_option("--bracket-tol", cfg.bracket_tol)->capture_default_str();
    vc->add_option("--drift-tol", cfg.drift_tol)->capture_default_str();
    vc->add_option("--drift-horizon", cfg.drift_horizon)->capture_default_str();
    vc->add_option("--drift-dt", cfg.drift_dt)->capture_default_str();
    vc->add_flag("--no-drift", cfg.no_drift, "skip the drift trajectory");
    vc->add_option("--corrupt-normalizer", cfg.corrupt_normalizer, "test hook: extra rho2 powers in the normalizer")
        ->capture_default_str();

    auto* va = app.add_subcommand("verify-algebra", "exact algebra suites; JSON report");
    add_common(va);
    va->add_option("suite", cfg.suite, "ttw-k2-classical, ttw-k2-quantum, holo-k3-classical, holo-k3-quantum, "
                                       "ttw-general P Q, models, closed-forms")
        ->required();
    va->add_option("args", cfg.suite_args, "suite arguments");

    auto* so = app.add_subcommand("scan-orbits", "closed-orbit scan over k; JSON table");
    add_common(so);
    so->add_option("--k-list", cfg.k_list, "comma-separated k values, P/Q or decimal")->required();
    so->add_option("--a", cfg.a)->capture_default_str();
    so->add_option("--b", cfg.b)->capture_default_str();
    so->add_option("--c", cfg.c)->capture_default_str();
    so->add_option("--starts", cfg.starts, "number of seeded starts")->capture_default_str();
    so->add_option("--seed", cfg.seed)->capture_default_str();
    so->add_option("--horizon", cfg.horizon)->capture_default_str();
    so->add_option("--dt", cfg.dt)->capture_default_str();
    so->add_option("--tol", cfg.tol)->capture_default_str();

    auto* rp = app.add_subcommand("repair", "solve a garbled coefficient exactly; JSON");
    add_common(rp);
    rp->add_option("target", cfg.target, "c2-classical, k2-holo, c2-quantum, k1-holo, k1-quantum")->required();

    // merge the config file: its arguments go right after the subcommand, so later flags win
    std::vector<std::string> args(argv, argv + argc);
    for (std::size_t n = 1; n + 1 < args.size(); ++n) {
        if (args[n] != "--config") continue;
        try {
            auto extra = detail::config_args(args[n + 1]);
            args.insert(args.begin() + 2, extra.begin(), extra.end());
        } catch (const UsageError& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        break;
    }
    std::vector<const char*> ptrs;
    for (const auto& s : args) ptrs.push_back(s.c_str());

    // scan-orbits defaults to a = b = c = 1
    if (args.size() > 1 && args[1] == "scan-orbits") cfg.a = cfg.b = cfg.c = "1";

    try {
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        CLI::App* failing = &app;
        for (auto* sc : app.get_subcommands()) failing = sc;
        err << failing->help();
        return kExitUsage;
    }

    try {
        if (*sim) return cmd_simulate(cfg, out);
        if (*vc) return cmd_verify_constants(cfg, out);
        if (*va) return cmd_verify_algebra(cfg, out);
        if (*so) return cmd_scan_orbits(cfg, out);
        if (*rp) return cmd_repair(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "failure: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace superint::cli
