// thuelab: compute, construct and verify nonrepetitive (Thue) total
// colourings of small graphs.
//
// Exit codes: 0 ok, 1 input or parse failure, 2 budget exhausted (or sampler
// failed), 3 check failed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "thue/construct.hpp"
#include "thue/json_io.hpp"
#include "thue/lll.hpp"
#include "thue/solver.hpp"

using namespace thue;

namespace {

struct ExitCode {
    int code;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    return parts;
}

long long parse_ll(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + " '" + s + "'");
    }
}

// generator mini-syntax: path:40, cycle:12, star:6, complete:4, diamond,
// random:n:maxdeg:seed
Graph graph_from_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& name = parts[0];
    auto arg = [&](size_t i) { return static_cast<int>(parse_ll(parts[i], "generator argument")); };
    if (name == "path" && parts.size() == 2)
        return make_path(arg(1));
    if (name == "cycle" && parts.size() == 2)
        return make_cycle(arg(1));
    if (name == "star" && parts.size() == 2)
        return make_star(arg(1));
    if (name == "complete" && parts.size() == 2)
        return make_complete(arg(1));
    if (name == "diamond" && parts.size() == 1)
        return make_diamond();
    if (name == "random" && parts.size() == 4)
        return random_graph(arg(1), arg(2), static_cast<std::uint64_t>(parse_ll(parts[3], "seed")));
    throw ParseError("bad generator spec '" + spec +
                     "' (use path:N, cycle:N, star:N, complete:N, diamond, random:N:MAXDEG:SEED)");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("JSON parse failure in '" + path + "': " + e.what());
    }
    return j;
}

struct GraphSource {
    std::string gen_spec;
    std::string file;

    Graph load() const {
        if (gen_spec.empty() == file.empty())
            throw ParseError("need exactly one graph source: --gen SPEC or --file FILE");
        if (!gen_spec.empty())
            return graph_from_spec(gen_spec);
        return graph_from_json(read_json_file(file));
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--gen", gen_spec, "generator spec (path:N, cycle:N, star:N, complete:N, "
                                           "diamond, random:N:MAXDEG:SEED)");
        cmd->add_option("--file", file, "graph JSON file");
    }
};

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw ParseError("cannot write '" + out_path + "'");
    out << content << '\n';
}

struct BudgetFlags {
    long long ms = -1;
    long long nodes = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-ms", ms, "wall-clock budget in ms (default from "
                                           "THUE_LAB_BUDGET_MS, else 600000)");
        cmd->add_option("--budget-nodes", nodes, "search node budget");
    }
    Budget resolve() const {
        Budget b = Budget::from_env();
        if (ms >= 0)
            b.max_millis = ms;
        if (nodes >= 0)
            b.max_nodes = nodes;
        return b;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonrepetitive (Thue) total colourings: exact values, constructions, "
                 "checkers and local-lemma numerics"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph as JSON (and optionally DOT)");
    GraphSource gen_src;
    std::string gen_out, gen_dot;
    gen_src.attach(gen);
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->add_option("--dot", gen_dot, "also write DOT to this file");
    gen->callback([&] {
        Graph g = gen_src.load();
        write_output(gen_out, graph_to_json(g).dump(2));
        if (!gen_dot.empty()) {
            std::ofstream out(gen_dot);
            if (!out)
                throw ParseError("cannot write '" + gen_dot + "'");
            out << to_dot(g);
        }
    });

    // ---- solve
    auto* solve = app.add_subcommand("solve", "exact Thue parameter of a graph");
    GraphSource solve_src;
    std::string solve_mode, solve_out;
    BudgetFlags solve_budget;
    solve_src.attach(solve);
    solve->add_option("--mode", solve_mode, "vertex | edge | weak-total | strong-total")
        ->required();
    solve_budget.attach(solve);
    solve->add_option("--out", solve_out, "output file (default stdout)");
    solve->callback([&] {
        auto mode = mode_from_name(solve_mode);
        if (!mode)
            throw ParseError("unknown mode '" + solve_mode + "'");
        Graph g = solve_src.load();
        SolveResult r = exact_number(g, *mode, solve_budget.resolve());
        write_output(solve_out, solve_result_to_json(r, *mode).dump(2));
        if (!r.solved)
            throw ExitCode{2};
    });

    // ---- check
    auto* check = app.add_subcommand("check", "run a validity checker on a colouring");
    GraphSource check_src;
    std::string check_colouring, check_mode, check_out;
    check_src.attach(check);
    check->add_option("--colouring", check_colouring, "colouring JSON file")->required();
    check->add_option("--mode", check_mode,
                      "proper | vertex | edge | weak-total | strong-total")
        ->required();
    check->add_option("--out", check_out, "output file (default stdout)");
    check->callback([&] {
        Graph g = check_src.load();
        TotalColouring c = colouring_from_json(read_json_file(check_colouring), g);
        std::optional<Witness> w;
        if (check_mode == "proper")
            w = is_proper_total(g, c);
        else if (check_mode == "vertex")
            w = is_nonrepetitive_vertex(g, c.vertex_colours);
        else if (check_mode == "edge")
            w = is_nonrepetitive_edge(g, c.edge_colours);
        else if (check_mode == "weak-total")
            w = is_weak_total_thue(g, c);
        else if (check_mode == "strong-total")
            w = is_strong_total_thue(g, c);
        else
            throw ParseError("unknown mode '" + check_mode + "'");
        json j;
        j["mode"] = check_mode;
        j["pass"] = !w.has_value();
        if (w)
            j["witness"] = witness_to_json(*w);
        write_output(check_out, j.dump(2));
        if (w)
            throw ExitCode{3};
    });

    // ---- construct
    auto* constr = app.add_subcommand("construct", "constructive colourings with verified bounds");
    GraphSource constr_src;
    std::string constr_method, constr_out;
    BudgetFlags constr_budget;
    constr_src.attach(constr);
    constr
        ->add_option("--method", constr_method,
                     "path-weak | path5 | cycle | star | spanning-tree | bridge | "
                     "rainbow-plus-one")
        ->required();
    constr_budget.attach(constr);
    constr->add_option("--out", constr_out, "output file (default stdout)");
    constr->callback([&] {
        Budget budget = constr_budget.resolve();
        auto sized_gen = [&](const std::string& wanted) {
            auto parts = split(constr_src.gen_spec, ':');
            if (constr_src.gen_spec.empty() || parts[0] != wanted || parts.size() != 2)
                throw ParseError("method '" + constr_method + "' needs --gen " + wanted + ":N");
            return static_cast<int>(parse_ll(parts[1], "generator argument"));
        };
        Graph g;
        TotalColouring c;
        const char* checker = "weak-total";
        if (constr_method == "path-weak") {
            int n = sized_gen("path");
            g = make_path(n);
            c = colour_path_weak(n);
        } else if (constr_method == "path5") {
            int n = sized_gen("path");
            g = make_path(n);
            c = colour_path_total(n);
            checker = "strong-total";
        } else if (constr_method == "cycle") {
            int n = sized_gen("cycle");
            g = make_cycle(n);
            c = colour_cycle_total(n, budget);
            checker = "strong-total";
        } else if (constr_method == "star") {
            int n = sized_gen("star");
            g = make_star(n);
            c = colour_star_total(n);
            checker = "strong-total";
        } else if (constr_method == "spanning-tree") {
            g = constr_src.load();
            c = colour_spanning_tree_bound(g, budget);
        } else if (constr_method == "bridge") {
            g = constr_src.load();
            c = colour_bridge_composition(g, {}, budget);
        } else if (constr_method == "rainbow-plus-one") {
            g = constr_src.load();
            c = rainbow_plus_one(g);
        } else {
            throw ParseError("unknown method '" + constr_method + "'");
        }
        bool pass = std::string(checker) == "weak-total" ? !is_weak_total_thue(g, c)
                                                         : !is_strong_total_thue(g, c);
        json j;
        j["method"] = constr_method;
        j["graph"] = graph_to_json(g);
        j["colouring"] = colouring_to_json(c);
        j["colours_used"] = c.colours_used();
        j["verification"] = {{"checker", checker}, {"pass", pass}};
        write_output(constr_out, j.dump(2));
    });

    // ---- bounds
    auto* bounds = app.add_subcommand("bounds", "every applicable bound for a graph");
    GraphSource bounds_src;
    std::string bounds_out, bounds_format = "json";
    int bounds_faces = -1;
    bool bounds_solve = false;
    BudgetFlags bounds_budget;
    bounds_src.attach(bounds);
    bounds->add_option("--faces", bounds_faces, "face count of a plane embedding (user-supplied)");
    bounds->add_flag("--solve", bounds_solve,
                     "also compute exact values and consistency-check the bounds");
    bounds->add_option("--format", bounds_format, "json | csv");
    bounds_budget.attach(bounds);
    bounds->add_option("--out", bounds_out, "output file (default stdout)");
    bounds->callback([&] {
        Graph g = bounds_src.load();
        Budget budget = bounds_budget.resolve();
        std::optional<ThueParameters> solved;
        if (bounds_solve)
            solved = compute_parameters(g, budget);
        std::optional<int> faces;
        if (bounds_faces >= 0)
            faces = bounds_faces;
        BoundsReport rep = bounds_report(g, faces, solved, budget);
        if (bounds_format == "csv") {
            write_output(bounds_out, bounds_to_csv(rep));
        } else {
            json j = bounds_to_json(rep);
            if (solved) {
                json s;
                if (solved->pi) s["pi"] = *solved->pi;
                if (solved->pi_prime) s["pi_prime"] = *solved->pi_prime;
                if (solved->pi_tw) s["pi_tw"] = *solved->pi_tw;
                if (solved->pi_t) s["pi_t"] = *solved->pi_t;
                j["exact"] = s;
            }
            write_output(bounds_out, j.dump(2));
        }
    });

    // ---- lll-verify
    auto* lllv = app.add_subcommand("lll-verify",
                                    "margin table of the three local-lemma inequalities");
    int lll_delta = 3, lll_tmax = 50;
    std::string lll_format = "json", lll_out;
    lllv->add_option("--delta", lll_delta, "maximum degree (>= 3)")->required();
    lllv->add_option("--tmax", lll_tmax, "largest repetition half-length t");
    lllv->add_option("--format", lll_format, "json | csv");
    lllv->add_option("--out", lll_out, "output file (default stdout)");
    lllv->callback([&] {
        LllReport rep = verify_lll_inequalities(lll_delta, lll_tmax);
        write_output(lll_out, lll_format == "csv" ? lll_report_to_csv(rep)
                                                  : lll_report_to_json(rep).dump(2));
    });

    // ---- lll-sample
    auto* sample = app.add_subcommand("lll-sample",
                                      "resampling search for a list total Thue colouring");
    GraphSource sample_src;
    std::string sample_lists, sample_mode = "strong", sample_out;
    int sample_list_size = 0, sample_path_cap = -1;
    std::uint64_t sample_seed = 0;
    long long sample_max_resamples = 100000;
    sample_src.attach(sample);
    sample->add_option("--lists", sample_lists, "list assignment JSON file");
    sample->add_option("--list-size", sample_list_size,
                       "uniform lists {1..K} on every element (alternative to --lists)");
    sample->add_option("--mode", sample_mode, "weak | strong");
    sample->add_option("--seed", sample_seed, "RNG seed");
    sample->add_option("--max-resamples", sample_max_resamples, "resampling budget");
    sample->add_option("--path-cap", sample_path_cap,
                       "element cap for checked paths (default min(2|V|,16))");
    sample->add_option("--out", sample_out, "output file (default stdout)");
    sample->callback([&] {
        Graph g = sample_src.load();
        if ((sample_lists.empty()) == (sample_list_size == 0))
            throw ParseError("need exactly one of --lists or --list-size");
        ListAssignment lists = sample_lists.empty()
                                   ? ListAssignment::uniform(g, sample_list_size)
                                   : list_assignment_from_json(read_json_file(sample_lists), g);
        SampleMode mode;
        if (sample_mode == "weak")
            mode = SampleMode::Weak;
        else if (sample_mode == "strong")
            mode = SampleMode::Strong;
        else
            throw ParseError("unknown mode '" + sample_mode + "'");
        std::optional<int> cap;
        if (sample_path_cap >= 0)
            cap = sample_path_cap;
        SampleResult r =
            moser_tardos_sample(g, lists, mode, sample_seed, sample_max_resamples, cap);
        json j;
        j["ok"] = r.ok;
        j["resamples"] = r.resamples;
        if (r.ok) {
            j["colouring"] = colouring_to_json(r.colouring);
            j["verification"] = {{"checker", sample_mode == "weak" ? "weak-total" : "strong-total"},
                                 {"pass", true}};
        } else if (r.last_witness) {
            j["last_witness"] = witness_to_json(*r.last_witness);
        }
        write_output(sample_out, j.dump(2));
        if (!r.ok)
            throw ExitCode{2};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ExitCode& e) {
        return e.code;
    } catch (const BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
