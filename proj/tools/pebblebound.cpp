// pebblebound: bounds for pebbling numbers of Cartesian product graphs.
//
// Subcommands:
//   pi GRAPH                exact pebbling number (exhaustive oracle)
//   twopeb GRAPH            support-resolved two-pebbling tables
//   bound G H               staged root search for an upper bound on pi(G x H)
//   emit-lp G H             write the integer program for one root as an LP file
//   probe-solvers           list which MILP backends are on PATH
//   reproduce               re-run the bundled result tables and compare
//
// Exit codes: 0 success, 2 configuration error, 3 solver/backend error,
// 4 oracle budget exceeded.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pebble/graph.hpp"
#include "pebble/lp_writer.hpp"
#include "pebble/model.hpp"
#include "pebble/oracle.hpp"
#include "pebble/profile.hpp"
#include "pebble/reference.hpp"
#include "pebble/search.hpp"
#include "pebble/solver.hpp"
#include "pebble/util.hpp"

namespace {

using namespace pebble;

struct global_options {
    std::string solver;            // "" = auto-select
    std::string workdir = "pebble-work";
    int jobs = 1;
    std::string policy_file;
    std::string profile_override;  // profiles JSON replacing bundled/oracle data
    double time_budget = -1.0;     // seconds; < 0 = unlimited
    std::string gap_schedule;      // comma-separated, e.g. "0.1,0.05,0"
};

constraint_policy load_policy(const global_options& gopts) {
    if (gopts.policy_file.empty()) return constraint_policy{};
    return constraint_policy::load(gopts.policy_file);
}

std::vector<double> parse_gap_schedule(const std::string& text) {
    if (text.empty()) return {0.1, 0.05, 0.0};
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw config_error("--gap-schedule: '" + tok + "' is not a number");
        }
    }
    return validate_gap_schedule(out);
}

// Profile resolution order: --profile-override file, bundled data for the
// thirteen reference graphs, then the exhaustive oracle.
struct profile_source {
    std::map<std::string, pebbling_profile> overrides;

    explicit profile_source(const std::string& override_path) {
        if (override_path.empty()) return;
        for (auto& p : load_profiles(override_path)) overrides[p.name] = std::move(p);
    }

    pebbling_profile get(const graph& g) const {
        if (auto it = overrides.find(g.name); it != overrides.end()) {
            pebbling_profile p = it->second;
            if (p.n != g.n)
                throw config_error("profile override '" + p.name + "' has " +
                                   std::to_string(p.n) + " vertices but the graph has " +
                                   std::to_string(g.n));
            return p;
        }
        if (has_bundled_profile(g.name)) return bundled_profile(g.name);
        try {
            return compute_profile(g);
        } catch (const budget_error& e) {
            throw budget_error(std::string(e.what()) +
                                   " (supply the data with --profile-override to skip the "
                                   "oracle)",
                               e.cells_needed, e.cells_allowed);
        }
    }

    bool overridden(const std::string& name) const { return overrides.count(name) != 0; }
};

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '-';
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot write '" + path + "'");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string display_name(const std::string& spec) {
    const base_graph_info* info = find_base_graph(spec);
    return info != nullptr ? info->label : spec;
}

// ---------------------------------------------------------------- pi

int cmd_pi(const std::string& spec) {
    graph g = parse_graph_spec(spec);
    pi_result r = pebbling_number(g);
    std::printf("pi(%s) = %d\n", spec.c_str(), r.pi);
    std::printf("witness: an unsolvable configuration of %d pebbles for root %d exists\n",
                r.pi - 1, r.witness_root + 1);
    return 0;
}

// ---------------------------------------------------------------- twopeb

void print_table_row(const char* label, const std::vector<int>& table, int n) {
    std::printf("%-8s", label);
    for (int s = 1; s <= n; ++s) std::printf(" %4d", table[s]);
    std::printf("\n");
}

void print_usable_supports(const char* label, const pebbling_profile& p, bool monotone) {
    const std::vector<int> supports =
        monotone ? p.correction_supports_mon() : p.correction_supports();
    std::printf("%s usable supports:", label);
    for (int s : supports) {
        const std::int64_t corr = monotone ? p.correction_mon(s) : p.correction(s);
        std::printf(" %d(%+lld)", s, static_cast<long long>(corr));
    }
    std::printf("\n");
}

int cmd_twopeb(const std::string& spec) {
    graph g = parse_graph_spec(spec);
    pebbling_profile p = compute_profile(g);
    std::printf("graph %s: n=%d pi=%d two-pebbling-property=%s\n", spec.c_str(), p.n, p.pi,
                p.has_two_pebbling_property ? "yes" : "no");
    std::printf("%-8s", "s");
    for (int s = 1; s <= p.n; ++s) std::printf(" %4d", s);
    std::printf("\n");
    print_table_row("pi2", p.two_peb, p.n);
    print_table_row("pi2mon", p.two_peb_mon, p.n);
    std::printf("default requirement: 2*pi - s + 1; deviations below (support(correction), "
                "0 is the empty-slice sentinel)\n");
    print_usable_supports("pi2", p, false);
    print_usable_supports("pi2mon", p, true);
    return 0;
}

// ---------------------------------------------------------------- bound

search_options make_search_options(const global_options& gopts, const std::string& workdir,
                                   double time_budget, int jobs) {
    search_options so;
    so.gap_schedule = parse_gap_schedule(gopts.gap_schedule);
    so.time_budget_s = time_budget;
    so.jobs = jobs;
    so.workdir = workdir;
    so.cache_dir = gopts.workdir + "/cache";
    so.policy = load_policy(gopts);
    return so;
}

int cmd_bound(const global_options& gopts, const std::string& spec_g,
              const std::string& spec_h) {
    graph g = parse_graph_spec(spec_g);
    graph h = parse_graph_spec(spec_h);
    profile_source profiles(gopts.profile_override);
    pebbling_profile pg = profiles.get(g);
    pebbling_profile ph = profiles.get(h);
    backend_probe backend = select_backend(gopts.solver);
    std::printf("solver: %s (%s)\n", backend_name(backend.backend), backend.path.c_str());

    const double budget = gopts.time_budget > 0 ? gopts.time_budget : 0.0;
    search_options so = make_search_options(
        gopts, gopts.workdir + "/" + sanitize(spec_g) + "_x_" + sanitize(spec_h), budget,
        gopts.jobs);
    search_report report = run_root_search(g, h, pg, ph, backend, so);

    const std::string report_path = so.workdir + "/report.json";
    write_text_file(report_path, report.to_json());

    std::printf("roots examined: %d (one per orbit pair), solves: %d%s\n", report.root_count,
                report.solve_count, report.from_cache ? " [cached]" : "");
    if (!report.completed) {
        std::printf("search incomplete: time budget exhausted before every root was "
                    "certified; no bound available\n");
        std::printf("report: %s\n", report_path.c_str());
        throw solver_error("bound search did not finish within the time budget");
    }
    const std::int64_t graham = static_cast<std::int64_t>(pg.pi) * ph.pi;
    std::printf("bound: pi(%s x %s) <= %lld\n", spec_g.c_str(), spec_h.c_str(),
                static_cast<long long>(report.bound));
    std::printf("conjectured product bound pi(G)*pi(H) = %lld -> %s\n",
                static_cast<long long>(graham),
                report.bound <= graham ? "bound is at least as strong"
                                       : "bound is weaker than the conjectured product");
    if (const reference_row* row = find_reference_row(spec_g, spec_h);
        row != nullptr && !row->skipped && !profiles.overridden(spec_g) &&
        !profiles.overridden(spec_h)) {
        const char* cmp = report.bound == row->bound ? "match"
                          : report.bound < row->bound ? "better"
                                                      : "worse";
        std::printf("published bound for this pair: %lld (%s)\n",
                    static_cast<long long>(row->bound), cmp);
    }
    std::printf("report: %s\n", report_path.c_str());
    return 0;
}

// ---------------------------------------------------------------- emit-lp

int cmd_emit_lp(const global_options& gopts, const std::string& spec_g,
                const std::string& spec_h, const std::string& root_text,
                const std::string& out_path) {
    graph g = parse_graph_spec(spec_g);
    graph h = parse_graph_spec(spec_h);
    profile_source profiles(gopts.profile_override);
    pebbling_profile pg = profiles.get(g);
    pebbling_profile ph = profiles.get(h);

    int rg = 1, rh = 1;
    if (!root_text.empty()) {
        if (std::sscanf(root_text.c_str(), "%d,%d", &rg, &rh) != 2)
            throw config_error("--root expects 'I,J' with 1-based indices, got '" + root_text +
                               "'");
    }
    if (rg < 1 || rg > g.n || rh < 1 || rh > h.n)
        throw config_error("--root (" + std::to_string(rg) + "," + std::to_string(rh) +
                           ") is outside the product grid");

    product_model m = assemble_model(g, h, pg, ph, rg - 1, rh - 1, load_policy(gopts));
    const std::string text = write_lp(m);
    if (out_path.empty() || out_path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        write_text_file(out_path, text);
        std::printf("wrote %s (%zu variables, %zu rows)\n", out_path.c_str(),
                    m.catalog.vars.size(), m.constraints.size());
    }
    return 0;
}

// ---------------------------------------------------------------- probe-solvers

int cmd_probe_solvers() {
    const std::vector<backend_probe> found = probe_backends();
    for (solver_backend b : {solver_backend::highs, solver_backend::cbc, solver_backend::scip,
                             solver_backend::gurobi}) {
        const backend_probe* hit = nullptr;
        for (const backend_probe& p : found)
            if (p.backend == b) {
                hit = &p;
                break;
            }
        std::printf("%-8s %s\n", backend_name(b), hit != nullptr ? hit->path.c_str() : "not found");
    }
    if (found.empty())
        std::printf("no MILP backend found; install one of highs, cbc, scip, or gurobi_cl\n");
    return 0;
}

// ---------------------------------------------------------------- reproduce

struct reproduce_row_result {
    const reference_row* row = nullptr;
    std::string status;  // match | better | worse | skipped-budget | skipped | failed
    std::int64_t computed = -1;
    double seconds = 0.0;
    std::string note;
};

const std::vector<std::pair<std::string, std::pair<int, int>>>& table_groups() {
    // Row ranges into reference_rows(), in published order.
    static const std::vector<std::pair<std::string, std::pair<int, int>>> groups = {
        {"lemke-lemke", {0, 6}},   {"lemke-small", {6, 21}},  {"lemke-large", {21, 36}},
        {"small-small", {36, 51}}, {"small-large", {51, 76}}, {"large-large", {76, 91}},
    };
    return groups;
}

std::vector<const reference_row*> select_rows(const std::vector<std::string>& tables,
                                              const std::vector<std::string>& pairs) {
    const auto& all = reference_rows();
    std::vector<const reference_row*> rows;
    auto add_range = [&rows, &all](int lo, int hi) {
        for (int i = lo; i < hi; ++i) rows.push_back(&all[i]);
    };
    for (const std::string& t : tables) {
        if (t == "all") {
            add_range(0, static_cast<int>(all.size()));
            continue;
        }
        bool found = false;
        for (const auto& [name, range] : table_groups())
            if (name == t) {
                add_range(range.first, range.second);
                found = true;
                break;
            }
        if (!found) {
            std::string names = "all";
            for (const auto& [name, range] : table_groups()) names += ", " + name;
            throw config_error("unknown table '" + t + "' (expected one of: " + names + ")");
        }
    }
    for (const std::string& p : pairs) {
        // Specs and labels may themselves contain commas (complete-bipartite:4,4;
        // K4,4), so try every comma as the separator until both halves resolve.
        const reference_row* row = nullptr;
        for (std::size_t comma = p.find(','); comma != std::string::npos;
             comma = p.find(',', comma + 1)) {
            const base_graph_info* ia = find_base_graph(p.substr(0, comma));
            const base_graph_info* ib = find_base_graph(p.substr(comma + 1));
            if (ia != nullptr && ib != nullptr) {
                row = find_reference_row(ia->spec, ib->spec);
                if (row != nullptr) break;
            }
        }
        if (row == nullptr)
            throw config_error("pair '" + p +
                               "' is not in the bundled result tables (expected 'G,H' using "
                               "the table graph specs or labels, e.g. 'lemke,complete:8' or "
                               "'L,K8')");
        rows.push_back(row);
    }
    if (tables.empty() && pairs.empty())
        add_range(0, static_cast<int>(all.size()));
    // Deduplicate, keeping first occurrence order.
    std::vector<const reference_row*> unique;
    for (const reference_row* r : rows)
        if (std::find(unique.begin(), unique.end(), r) == unique.end()) unique.push_back(r);
    return unique;
}

int cmd_reproduce(const global_options& gopts, const std::vector<std::string>& tables,
                  const std::vector<std::string>& pairs, double budget_scale) {
    const std::vector<const reference_row*> rows = select_rows(tables, pairs);
    profile_source profiles(gopts.profile_override);
    backend_probe backend = select_backend(gopts.solver);
    const constraint_policy policy = load_policy(gopts);
    (void)policy;  // validated here so a bad file fails before any solve

    std::printf("solver: %s (%s)\n", backend_name(backend.backend), backend.path.c_str());
    std::printf("profiles: bundled exact pebbling data%s\n",
                gopts.profile_override.empty()
                    ? ""
                    : (" with overrides from " + gopts.profile_override).c_str());
    std::printf("note: the published base-graph table lists pi=12 for K4,4 and 2^n for the\n"
                "      n-vertex paths; the exact values (8 and 2^(n-1)) are what every\n"
                "      product cell uses, so the bundled profiles carry the exact values.\n");
    std::printf("per-row budget: %.0fx the published seconds (min 60s)%s\n\n", budget_scale,
                gopts.time_budget >= 0
                    ? (", total budget " + std::to_string(gopts.time_budget) + "s").c_str()
                    : "");

    using clock = std::chrono::steady_clock;
    const clock::time_point t0 = clock::now();
    auto total_remaining = [&]() -> double {
        if (gopts.time_budget < 0) return -1.0;  // unlimited
        const double used = std::chrono::duration<double>(clock::now() - t0).count();
        return std::max(0.0, gopts.time_budget - used);
    };

    std::vector<reproduce_row_result> results(rows.size());
    std::atomic<std::size_t> next{0};

    auto run_row = [&](std::size_t idx) {
        const reference_row& row = *rows[idx];
        reproduce_row_result& res = results[idx];
        res.row = &row;
        if (row.skipped) {
            res.status = "skipped";
            res.note = "not run in the published study (memory)";
            return;
        }
        double row_budget = std::max(60.0, budget_scale * row.seconds);
        const double remaining = total_remaining();
        if (remaining >= 0) {
            if (remaining == 0.0) {
                res.status = "skipped-budget";
                return;
            }
            row_budget = std::min(row_budget, remaining);
        }
        try {
            graph g = parse_graph_spec(row.g);
            graph h = parse_graph_spec(row.h);
            pebbling_profile pg = profiles.get(g);
            pebbling_profile ph = profiles.get(h);
            const int solver_threads = gopts.jobs > 1 ? 1 : gopts.jobs;
            search_options so = make_search_options(
                gopts,
                gopts.workdir + "/reproduce/" + sanitize(row.g) + "_x_" + sanitize(row.h),
                row_budget, solver_threads);
            const clock::time_point r0 = clock::now();
            search_report rep = run_root_search(g, h, pg, ph, backend, so);
            res.seconds = std::chrono::duration<double>(clock::now() - r0).count();
            if (!rep.completed) {
                res.status = "skipped-budget";
                return;
            }
            res.computed = rep.bound;
            const bool overridden = profiles.overridden(row.g) || profiles.overridden(row.h);
            std::int64_t published = row.bound;
            if (overridden) {
                res.note = "profiles overridden; conjecture product recomputed as " +
                           std::to_string(static_cast<long long>(pg.pi) * ph.pi);
            }
            res.status = res.computed == published ? "match"
                         : res.computed < published ? "better"
                                                    : "worse";
        } catch (const std::exception& e) {
            res.status = "failed";
            res.note = e.what();
        }
    };

    const int workers = std::max(1, std::min<int>(gopts.jobs, static_cast<int>(rows.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) run_row(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
                    run_row(i);
            });
        for (std::thread& t : pool) t.join();
    }

    int compared = 0, matched = 0, better = 0, worse = 0, skipped = 0, failed = 0;
    std::printf("%-14s %-14s %10s %10s  %-14s %s\n", "G", "H", "published", "computed",
                "status", "time");
    for (const reproduce_row_result& res : results) {
        const reference_row& row = *res.row;
        std::string published = row.skipped ? "-" : std::to_string(row.bound);
        std::string computed = res.computed >= 0 ? std::to_string(res.computed) : "-";
        std::string time = res.computed >= 0 ? (std::to_string(res.seconds).substr(0, 6) + "s")
                                             : "-";
        std::printf("%-14s %-14s %10s %10s  %-14s %s\n", display_name(row.g).c_str(),
                    display_name(row.h).c_str(), published.c_str(), computed.c_str(),
                    res.status.c_str(), time.c_str());
        if (!res.note.empty()) std::printf("    note: %s\n", res.note.c_str());
        if (res.status == "match") ++matched, ++compared;
        else if (res.status == "better") ++better, ++compared;
        else if (res.status == "worse") ++worse, ++compared;
        else if (res.status == "failed") ++failed;
        else ++skipped;
    }
    std::printf("\ncompared %d of %zu rows: %d match, %d better, %d worse; %d skipped, "
                "%d failed\n",
                compared, results.size(), matched, better, worse, skipped, failed);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounds for pebbling numbers of Cartesian product graphs"};
    app.require_subcommand(1);

    global_options gopts;
    app.add_option("--solver", gopts.solver,
                   "MILP backend: highs, cbc, scip, or gurobi (default: first found; "
                   "PEBBLEBOUND_SOLVER also honored)");
    app.add_option("--workdir", gopts.workdir,
                   "directory for LP files, solver logs, reports, and the cache");
    app.add_option("--jobs", gopts.jobs,
                   "solver threads (bound) / concurrent rows (reproduce)");
    app.add_option("--policy-file", gopts.policy_file,
                   "JSON file tuning constraint-generation caps");
    app.add_option("--profile-override", gopts.profile_override,
                   "profiles JSON supplying pebbling data instead of bundled/oracle values");
    app.add_option("--time-budget", gopts.time_budget,
                   "wall-clock budget in seconds (reproduce: 0 skips every row)");
    app.add_option("--gap-schedule", gopts.gap_schedule,
                   "comma-separated relative-gap stages, e.g. 0.1,0.05,0");

    std::string pi_graph;
    CLI::App* sub_pi = app.add_subcommand("pi", "exact pebbling number of a graph");
    sub_pi->add_option("graph", pi_graph, "graph spec (e.g. lemke, cycle:7, path:8)")
        ->required();

    std::string twopeb_graph;
    CLI::App* sub_twopeb =
        app.add_subcommand("twopeb", "support-resolved two-pebbling tables of a graph");
    sub_twopeb->add_option("graph", twopeb_graph, "graph spec")->required();

    std::string bound_g, bound_h;
    CLI::App* sub_bound =
        app.add_subcommand("bound", "upper bound for the pebbling number of G x H");
    sub_bound->add_option("G", bound_g, "first factor graph spec")->required();
    sub_bound->add_option("H", bound_h, "second factor graph spec")->required();

    std::string emit_g, emit_h, emit_root = "1,1", emit_out;
    CLI::App* sub_emit =
        app.add_subcommand("emit-lp", "write the integer program for one root as LP text");
    sub_emit->add_option("G", emit_g, "first factor graph spec")->required();
    sub_emit->add_option("H", emit_h, "second factor graph spec")->required();
    sub_emit->add_option("--root", emit_root, "1-based root pair 'I,J' (default 1,1)");
    sub_emit->add_option("--out", emit_out, "output path (default: stdout)");

    CLI::App* sub_probe =
        app.add_subcommand("probe-solvers", "list available MILP backends");

    std::vector<std::string> rep_tables, rep_pairs;
    double rep_scale = 10.0;
    CLI::App* sub_rep = app.add_subcommand(
        "reproduce", "re-run bundled result tables and compare against the published bounds");
    sub_rep->add_option("--table", rep_tables,
                        "table group: lemke-lemke, lemke-small, lemke-large, small-small, "
                        "small-large, large-large, or all (repeatable)");
    sub_rep->add_option("--pair", rep_pairs, "single instance 'G,H' (repeatable)");
    sub_rep->add_option("--budget-scale", rep_scale,
                        "per-row budget as a multiple of the published seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sub_pi->parsed()) return cmd_pi(pi_graph);
        if (sub_twopeb->parsed()) return cmd_twopeb(twopeb_graph);
        if (sub_bound->parsed()) return cmd_bound(gopts, bound_g, bound_h);
        if (sub_emit->parsed()) return cmd_emit_lp(gopts, emit_g, emit_h, emit_root, emit_out);
        if (sub_probe->parsed()) return cmd_probe_solvers();
        if (sub_rep->parsed()) return cmd_reproduce(gopts, rep_tables, rep_pairs, rep_scale);
    } catch (const config_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const budget_error& e) {
        std::fprintf(stderr, "oracle budget exceeded: %s\n", e.what());
        return 4;
    } catch (const integrity_error& e) {
        std::fprintf(stderr, "integrity error: %s\n", e.what());
        return 3;
    } catch (const solver_error& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
    return 0;
}
