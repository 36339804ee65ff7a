// nicety: exact analysis of polynomial maps over the rationals.
//
// Every subcommand reads the map text / matrix JSON formats, prints a
// human-readable summary on stdout and optionally a machine-readable JSON
// report (--json PATH, or "-" for stdout, in which case the human text moves
// to stderr).  Reports are byte-identical across runs with equal inputs and
// seeds, except for the "timing" key.
//
// Exit codes: 0 affirmative result, 1 input or usage error, 2 negative
// verdict (not nice / not Keller / identity fails), 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nicety/corpus.hpp"
#include "nicety/jacobian.hpp"
#include "sha256.hpp"

using nlohmann::ordered_json;
using namespace nicety;

namespace {

struct GlobalOptions {
    std::size_t term_budget = 10'000'000;
    std::uint64_t work_budget = 8'000'000;
    int threads = 1; // reserved; the engine is deterministic and single-threaded
    std::string json_path;

    Budgets budgets() const {
        Budgets b;
        b.term_limit = term_budget;
        b.step_work_limit = work_budget;
        return b;
    }
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

ordered_json input_entry(const std::string& path, const std::string& content) {
    return ordered_json{{"path", path}, {"sha256", nicety_cli::Sha256::of(content)}};
}

struct LoadedMap {
    ParsedMap parsed;
    ordered_json input;
};

LoadedMap load_map(const std::string& path, const Limits& lim) {
    const std::string content = read_file(path);
    return {parse_map(content, lim), input_entry(path, content)};
}

RatMatrix load_matrix(const std::string& path, ordered_json& inputs) {
    const std::string content = read_file(path);
    inputs.push_back(input_entry(path, content));
    return parse_matrix(content);
}

// Human text goes to stderr when the JSON report claims stdout.
std::ostream& human(const GlobalOptions& g) {
    return g.json_path == "-" ? std::cerr : std::cout;
}

void emit_json(const GlobalOptions& g, const ordered_json& j) {
    if (g.json_path.empty()) return;
    if (g.json_path == "-") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream os(g.json_path, std::ios::binary);
        if (!os) throw Error("cannot write '" + g.json_path + "'");
        os << j.dump(2) << '\n';
    }
}

ordered_json report_skeleton(const std::string& command) {
    ordered_json j;
    j["schema"] = "nicety-report/1";
    j["command"] = command;
    j["inputs"] = ordered_json::array();
    return j;
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::nice: return "nice";
    case Verdict::not_nice_within: return "not_nice_within";
    default: return "budget_exceeded";
    }
}

int verdict_exit(Verdict v) {
    switch (v) {
    case Verdict::nice: return 0;
    case Verdict::not_nice_within: return 2;
    default: return 3;
    }
}

ordered_json steps_json(const NicetySequence& seq) {
    ordered_json steps = ordered_json::array();
    for (const auto& rec : seq.records) {
        ordered_json s;
        s["k"] = rec.k;
        s["mode"] = rec.mode == StepMode::full ? "full" : "truncated";
        if (rec.mode == StepMode::truncated) s["cap"] = rec.cap;
        ordered_json degs = ordered_json::array();
        for (const auto& d : rec.degrees)
            degs.push_back(d ? ordered_json(*d) : ordered_json(nullptr));
        s["degrees"] = std::move(degs);
        ordered_json orders = ordered_json::array();
        for (const auto& o : rec.orders)
            orders.push_back(o ? ordered_json(*o) : ordered_json(nullptr));
        s["orders"] = std::move(orders);
        s["terms"] = rec.terms;
        steps.push_back(std::move(s));
    }
    return steps;
}

void print_step_table(std::ostream& os, const NicetySequence& seq) {
    for (const auto& rec : seq.records) {
        os << "  k=" << rec.k;
        if (rec.mode == StepMode::truncated) os << " (truncated at degree " << rec.cap << ")";
        os << "  deg=[";
        for (std::size_t i = 0; i < rec.degrees.size(); ++i) {
            if (i) os << ",";
            if (rec.degrees[i]) os << *rec.degrees[i];
            else os << "-inf";
        }
        os << "]  terms=[";
        for (std::size_t i = 0; i < rec.terms.size(); ++i) {
            if (i) os << ",";
            os << rec.terms[i];
        }
        os << "]\n";
    }
    if (seq.degree_flag)
        os << "  note: degree exceeded the inverse bound at step " << seq.degree_flag_step
           << "\n";
    if (seq.budget_exhausted) os << "  note: " << seq.budget_reason << "\n";
}

int run_check_nice(const GlobalOptions& g, const std::string& input, int max_steps,
                   const std::string& out_path, bool invert_mode) {
    Timer timer;
    const Budgets budgets = g.budgets();
    LoadedMap loaded = load_map(input, budgets.limits());
    const ParsedMap& pm = loaded.parsed;

    NicetyReport rep = check_nice(pm.map, max_steps, budgets);
    std::ostream& os = human(g);
    os << verdict_name(rep.verdict) << "(" << rep.m << ")\n";
    print_step_table(os, rep.sequence);

    std::string inverse_text;
    if (rep.verdict == Verdict::nice) {
        inverse_text = render_map(*rep.inverse, pm.var_names);
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw Error("cannot write '" + out_path + "'");
            f << inverse_text;
            os << "inverse written to " << out_path << "\n";
        } else {
            os << inverse_text;
        }
    }

    const int exit_code =
        invert_mode ? (rep.verdict == Verdict::nice && rep.inverse_verified
                           ? 0
                           : verdict_exit(rep.verdict) == 0 ? 2 : verdict_exit(rep.verdict))
                    : verdict_exit(rep.verdict);

    ordered_json j = report_skeleton(invert_mode ? "invert" : "check-nice");
    j["inputs"].push_back(loaded.input);
    j["verdict"] = verdict_name(rep.verdict);
    j["m"] = rep.m;
    j["steps"] = steps_json(rep.sequence);
    if (rep.verdict == Verdict::nice) {
        ordered_json inv = ordered_json::array();
        for (const auto& comp : rep.inverse->components())
            inv.push_back(render_polynomial(comp, pm.var_names));
        j["inverse"] = std::move(inv);
        j["inverse_verified"] = rep.inverse_verified;
    }
    if (rep.sequence.degree_flag) j["degree_bound_flag_step"] = rep.sequence.degree_flag_step;
    j["timing"] = ordered_json{{"seconds", timer.seconds()}};
    j["exit"] = exit_code;
    emit_json(g, j);
    return exit_code;
}

int run_keller(const GlobalOptions& g, const std::string& input) {
    Timer timer;
    const Budgets budgets = g.budgets();
    LoadedMap loaded = load_map(input, budgets.limits());
    KellerResult res = keller_check(loaded.parsed.map, budgets.limits());
    const std::string det_text = render_polynomial(res.det, loaded.parsed.var_names);
    human(g) << "det = " << det_text << "\n"
             << (res.is_keller ? "keller: true" : "keller: false") << "\n";
    const int exit_code = res.is_keller ? 0 : 2;
    ordered_json j = report_skeleton("keller");
    j["inputs"].push_back(loaded.input);
    j["verdict"] = res.is_keller ? "keller" : "not_keller";
    j["det"] = det_text;
    j["timing"] = ordered_json{{"seconds", timer.seconds()}};
    j["exit"] = exit_code;
    emit_json(g, j);
    return exit_code;
}

int run_nilpotence(const GlobalOptions& g, const std::string& input, bool of_h,
                   const std::string& mode, std::uint64_t seed, int samples, int kmax) {
    Timer timer;
    const Budgets budgets = g.budgets();
    LoadedMap loaded = load_map(input, budgets.limits());
    PolyMap map = loaded.parsed.map;
    if (of_h) {
        if (!map.is_square()) throw DimensionError("--of-h requires a square map");
        map = map_sub(map, PolyMap::identity(map.domain_dim()));
    }
    PolyMatrix jac = jacobian(map);

    NilpotenceResult res{};
    if (mode == "symbolic") {
        res = nilpotence_index_symbolic(jac, kmax, budgets.limits());
    } else if (mode == "randomized") {
        res = nilpotence_index_randomized(jac, kmax, samples, seed);
    } else {
        throw DomainError("--mode must be symbolic or randomized");
    }

    std::ostream& os = human(g);
    if (res.nilpotent) os << "nilpotent with index " << res.index << "\n";
    else os << "not nilpotent within k_max = " << kmax << "\n";
    if (res.randomized)
        os << "mode: randomized (seed=" << res.seed << ", samples=" << res.samples
           << ", Monte Carlo answer)\n";
    else os << "mode: symbolic (exact)\n";

    const int exit_code = res.nilpotent ? 0 : 2;
    ordered_json j = report_skeleton("nilpotence");
    j["inputs"].push_back(loaded.input);
    j["verdict"] = res.nilpotent ? "nilpotent" : "not_nilpotent_within";
    if (res.nilpotent) j["index"] = res.index;
    j["k_max"] = kmax;
    if (res.randomized)
        j["randomized"] =
            ordered_json{{"mode", "randomized"}, {"seed", res.seed}, {"samples", res.samples}};
    j["timing"] = ordered_json{{"seconds", timer.seconds()}};
    j["exit"] = exit_code;
    emit_json(g, j);
    return exit_code;
}

int run_map_output(const GlobalOptions& g, const PolyMap& map,
                   const std::vector<std::string>& names, const std::string& out_path) {
    const std::string text = render_map(map, names);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error("cannot write '" + out_path + "'");
        f << text;
        human(g) << "map written to " << out_path << "\n";
    } else {
        human(g) << text;
    }
    return 0;
}

int run_gz(const GlobalOptions& g, const std::string& small_path, const std::string& big_path,
           const std::string& b_path, const std::string& c_path, int t_max) {
    Timer timer;
    const Budgets budgets = g.budgets();
    ordered_json inputs = ordered_json::array();
    const std::string small_text = read_file(small_path);
    const std::string big_text = read_file(big_path);
    inputs.push_back(input_entry(small_path, small_text));
    inputs.push_back(input_entry(big_path, big_text));
    ParsedMap small = parse_map(small_text, budgets.limits());
    ParsedMap big = parse_map(big_text, budgets.limits());
    RatMatrix b = load_matrix(b_path, inputs);
    RatMatrix c = load_matrix(c_path, inputs);

    GZReport rep = gz_check(GZPair{small.map, big.map, b, c}, t_max, budgets);
    std::ostream& os = human(g);
    os << "B*C = I: " << (rep.bc_identity ? "pass" : "FAIL") << "\n";
    os << "f = B o F o C: " << (rep.base_pairing ? "pass" : "FAIL") << "\n";
    for (const auto& [t, ok] : rep.sequence_pairing)
        os << "p_" << t << " = B o P_" << t << " o C: " << (ok ? "pass" : "FAIL") << "\n";
    const int exit_code = rep.all_ok ? 0 : 2;

    ordered_json j = report_skeleton("gz-check");
    j["inputs"] = std::move(inputs);
    j["verdict"] = rep.all_ok ? "paired" : "mismatch";
    j["bc_identity"] = rep.bc_identity;
    j["base_pairing"] = rep.base_pairing;
    ordered_json seqs = ordered_json::array();
    for (const auto& [t, ok] : rep.sequence_pairing)
        seqs.push_back(ordered_json{{"t", t}, {"ok", ok}});
    j["sequence_pairing"] = std::move(seqs);
    j["timing"] = ordered_json{{"seconds", timer.seconds()}};
    j["exit"] = exit_code;
    emit_json(g, j);
    return exit_code;
}

int run_corpus(const GlobalOptions& g, const std::string& name) {
    Timer timer;
    const Budgets budgets = g.budgets();
    std::vector<std::string> names;
    if (name.empty()) names = list_fixtures();
    else names.push_back(name);

    ordered_json fixtures = ordered_json::array();
    bool all_pass = true;
    std::ostream& os = human(g);
    for (const auto& n : names) {
        const Fixture& fx = get_fixture(n);
        os << "fixture " << n << ":\n";
        ordered_json facts = ordered_json::array();
        for (const FactResult& fact : run_fixture(n, budgets)) {
            const char* status = fact.informational ? "info" : (fact.pass ? "pass" : "FAIL");
            os << "  [" << status << "] " << fact.label << " [" << provenance_name(fact.provenance)
               << "]";
            if (!fact.detail.empty()) os << " (" << fact.detail << ")";
            os << "\n";
            all_pass = all_pass && (fact.pass || fact.informational);
            facts.push_back(ordered_json{{"label", fact.label},
                                         {"provenance", provenance_name(fact.provenance)},
                                         {"informational", fact.informational},
                                         {"pass", fact.pass},
                                         {"detail", fact.detail}});
        }
        ordered_json entry;
        entry["name"] = n;
        entry["input"] = input_entry("corpus:" + n, render_map(fx.map, fx.var_names));
        entry["facts"] = std::move(facts);
        fixtures.push_back(std::move(entry));
    }
    const int exit_code = all_pass ? 0 : 2;
    os << (all_pass ? "all facts pass" : "FACT MISMATCH") << "\n";

    ordered_json j = report_skeleton("corpus run");
    j["fixtures"] = std::move(fixtures);
    j["verdict"] = all_pass ? "ok" : "mismatch";
    j["timing"] = ordered_json{{"seconds", timer.seconds()}};
    j["exit"] = exit_code;
    emit_json(g, j);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nicety analysis of polynomial maps over the rationals"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may appear after the subcommand

    GlobalOptions g;
    app.add_option("--term-budget", g.term_budget, "max stored monomials per polynomial");
    app.add_option("--work-budget", g.work_budget, "max merge operations per sequence step");
    app.add_option("--threads", g.threads,
                   "reserved; results are identical for any value");
    app.add_option("--json", g.json_path, "write a JSON report to PATH ('-' for stdout)");

    std::string input, out_path, matrix_path, f_path, g_path, b_path, c_path;
    int max_steps = 32;
    int kmax = 8;
    int t_max = 3;
    int samples = 8;
    std::uint64_t seed = 1;
    bool of_h = false;
    std::string mode = "symbolic";
    std::string fixture_name;
    std::string export_dir;

    auto* check = app.add_subcommand("check-nice", "decide nicety and synthesize the inverse");
    check->add_option("--input", input, "map file")->required();
    check->add_option("--max-steps", max_steps, "sequence step bound");
    check->add_option("--out", out_path, "write the inverse here instead of stdout");

    auto* invert = app.add_subcommand("invert", "like check-nice but fails unless invertible");
    invert->add_option("--input", input, "map file")->required();
    invert->add_option("--max-steps", max_steps, "sequence step bound");
    invert->add_option("--out", out_path, "write the inverse here instead of stdout");

    auto* keller = app.add_subcommand("keller", "Jacobian determinant and the Keller test");
    keller->add_option("--input", input, "map file")->required();

    auto* nil = app.add_subcommand("nilpotence", "nilpotence index of the Jacobian");
    nil->add_option("--input", input, "map file")->required();
    nil->add_flag("--of-h", of_h, "use J(F - Id) instead of J(F)");
    nil->add_option("--mode", mode, "symbolic | randomized");
    nil->add_option("--seed", seed, "randomized mode seed");
    nil->add_option("--samples", samples, "randomized mode sample count");
    nil->add_option("--kmax", kmax, "largest power tested");

    auto* conj = app.add_subcommand("conjugate", "compute T^-1 o F o T");
    conj->add_option("--input", input, "map file")->required();
    conj->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    conj->add_option("--out", out_path, "output file");

    auto* comp = app.add_subcommand("compose", "compose two maps (applies --g first)");
    comp->add_option("--f", f_path, "outer map file")->required();
    comp->add_option("--g", g_path, "inner map file")->required();
    comp->add_option("--out", out_path, "output file");

    auto* dru = app.add_subcommand("druzkowski", "build X + ((A X)_i^3) from a matrix");
    dru->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    dru->add_option("--out", out_path, "output file");

    auto* gz = app.add_subcommand("gz-check", "verify a pairing f = B o F o C");
    gz->add_option("--small", f_path, "small map file")->required();
    gz->add_option("--big", g_path, "big map file")->required();
    gz->add_option("--b", b_path, "B matrix JSON")->required();
    gz->add_option("--c", c_path, "C matrix JSON")->required();
    gz->add_option("--tmax", t_max, "largest sequence index checked");

    auto* corpus_cmd = app.add_subcommand("corpus", "built-in fixture corpus");
    auto* corpus_list = corpus_cmd->add_subcommand("list", "list fixture names");
    auto* corpus_run = corpus_cmd->add_subcommand("run", "re-verify fixture facts");
    corpus_run->add_option("name", fixture_name, "fixture name (default: all)");
    auto* corpus_export = corpus_cmd->add_subcommand("export", "write fixture files");
    corpus_export->add_option("--dir", export_dir, "output directory")->required();
    corpus_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);

        if (*check) return run_check_nice(g, input, max_steps, out_path, false);
        if (*invert) return run_check_nice(g, input, max_steps, out_path, true);
        if (*keller) return run_keller(g, input);
        if (*nil) return run_nilpotence(g, input, of_h, mode, seed, samples, kmax);
        if (*conj) {
            LoadedMap loaded = load_map(input, g.budgets().limits());
            ordered_json inputs = ordered_json::array();
            RatMatrix t = load_matrix(matrix_path, inputs);
            PolyMap result = conjugate(loaded.parsed.map, t, g.budgets().limits());
            return run_map_output(g, result, loaded.parsed.var_names, out_path);
        }
        if (*comp) {
            LoadedMap fa = load_map(f_path, g.budgets().limits());
            LoadedMap ga = load_map(g_path, g.budgets().limits());
            PolyMap result = compose(fa.parsed.map, ga.parsed.map, g.budgets().limits());
            return run_map_output(g, result, ga.parsed.var_names, out_path);
        }
        if (*dru) {
            ordered_json inputs = ordered_json::array();
            RatMatrix a = load_matrix(matrix_path, inputs);
            DruzkowskiMap d = druzkowski(a);
            return run_map_output(g, d.map, default_names(a.rows()), out_path);
        }
        if (*gz) return run_gz(g, f_path, g_path, b_path, c_path, t_max);
        if (*corpus_list) {
            for (const auto& n : list_fixtures()) human(g) << n << "\n";
            return 0;
        }
        if (*corpus_run) return run_corpus(g, fixture_name);
        if (*corpus_export) {
            for (const auto& n : list_fixtures())
                for (const auto& file : write_fixture_files(n, export_dir))
                    human(g) << "wrote " << file << "\n";
            return 0;
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage problems are input errors
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
