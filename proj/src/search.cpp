#include "pebble/search.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pebble/profile.hpp"
#include "pebble/util.hpp"

namespace pebble {

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string graph_signature(const graph& g) {
    std::string s = g.name + "|" + std::to_string(g.n);
    for (const auto& [u, v] : g.edges)
        s += "," + std::to_string(u) + "-" + std::to_string(v);
    return s;
}

std::string cache_key(const std::string& mode, const graph& g, const graph& h,
                      const pebbling_profile& pg, const pebbling_profile& ph,
                      const constraint_policy& policy, const std::vector<double>& schedule,
                      const backend_probe& backend) {
    std::string s = mode + "\n" + graph_signature(g) + "\n" + graph_signature(h) + "\n";
    s += profiles_to_json({pg, ph});
    s += policy.to_json();
    for (double gap : schedule) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g;", gap);
        s += buf;
    }
    s += "\n";
    s += backend_name(backend.backend);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(s)));
    return hex;
}

nlohmann::ordered_json stage_to_json(const stage_record& r) {
    nlohmann::ordered_json j;
    j["gap_index"] = r.gap_index;
    j["root"] = {r.root_g + 1, r.root_h + 1};
    j["gap"] = r.gap;
    j["status"] = status_name(r.status);
    j["has_incumbent"] = r.has_incumbent;
    j["objective"] = r.objective;
    j["has_dual_bound"] = r.has_dual_bound;
    j["dual_bound"] = r.dual_bound;
    j["seconds"] = r.seconds;
    return j;
}

solve_status status_from_name(const std::string& s) {
    for (solve_status st :
         {solve_status::optimal, solve_status::feasible, solve_status::infeasible,
          solve_status::time_limit, solve_status::unbounded, solve_status::error})
        if (s == status_name(st)) return st;
    throw config_error("unknown solve status '" + s + "' in search report");
}

// Shared engine for the staged search and the exhaustive baseline.
struct search_engine {
    const graph& g;
    const graph& h;
    const pebbling_profile& pg;
    const pebbling_profile& ph;
    const backend_probe& backend;
    const search_options& opts;
    search_report report;
    std::int64_t best = -1;  // N: largest exactly-verified incumbent objective
    double t_start = now_seconds();

    bool budget_left() const {
        if (opts.time_budget_s <= 0) return true;
        return now_seconds() - t_start < opts.time_budget_s;
    }
    double remaining_budget() const {
        if (opts.time_budget_s <= 0) return 0.0;
        return std::max(0.0, opts.time_budget_s - (now_seconds() - t_start));
    }

    // Runs one solve; returns false when the search cannot continue
    // (budget exhausted or no usable certificate).
    bool step(int root_g, int root_h, double gap, int gap_index, const std::string& stage_dir,
              std::int64_t& u_out, bool& u_valid) {
        product_model model = assemble_model(g, h, pg, ph, root_g, root_h, opts.policy);
        solve_options so;
        so.rel_gap = gap;
        so.time_limit_s = remaining_budget();
        so.threads = opts.jobs;
        so.workdir = opts.workdir + "/" + stage_dir;

        stage_record rec;
        rec.gap_index = gap_index;
        rec.root_g = root_g;
        rec.root_h = root_h;
        rec.gap = gap;
        const double t0 = now_seconds();
        solve_result sr = solve_model(model, backend, so);
        rec.seconds = now_seconds() - t0;
        rec.status = sr.status;
        rec.has_incumbent = sr.has_incumbent;
        rec.objective = sr.objective;
        rec.has_dual_bound = sr.has_dual_bound;
        rec.dual_bound = sr.dual_bound;
        report.stages.push_back(rec);
        ++report.solve_count;

        if (sr.status == solve_status::infeasible)
            throw integrity_error(
                "relaxation reported infeasible, yet the empty configuration always satisfies "
                "it — solver or model defect");
        if (sr.status == solve_status::unbounded)
            throw solver_error(
                "relaxation reported unbounded (was the set-count cap disabled in the "
                "policy?)");
        if (sr.has_incumbent && sr.has_dual_bound && sr.dual_bound < sr.objective)
            throw integrity_error(
                "solver dual bound " + std::to_string(sr.dual_bound) +
                " fell below the exactly verified incumbent " + std::to_string(sr.objective));

        if (sr.has_incumbent) best = std::max(best, sr.objective);
        u_valid = sr.has_dual_bound;
        if (u_valid) u_out = sr.dual_bound;
        if (sr.status == solve_status::time_limit) return false;
        if (gap == 0.0 && !(sr.status == solve_status::optimal && sr.has_dual_bound))
            return false;  // the exact stage must end in a certificate
        return true;
    }
};

}  // namespace

std::vector<root_candidate> candidate_roots(const graph& g, const graph& h) {
    std::vector<root_candidate> out;
    const auto og = vertex_orbits(g);
    const auto oh = vertex_orbits(h);
    for (const auto& a : og)
        for (const auto& b : oh) out.push_back({a.front(), b.front()});
    return out;
}

std::vector<double> validate_gap_schedule(std::vector<double> schedule) {
    if (schedule.empty()) throw config_error("gap schedule must not be empty");
    for (double g : schedule) {
        if (!std::isfinite(g) || g < 0)
            throw config_error("gap schedule entries must be finite and non-negative");
    }
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] >= schedule[i - 1])
            throw config_error("gap schedule must be strictly decreasing");
    if (schedule.back() != 0.0) schedule.push_back(0.0);
    return schedule;
}

std::string search_report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["mode"] = mode;
    j["graph_g"] = graph_g;
    j["graph_h"] = graph_h;
    j["root_count"] = root_count;
    j["solve_count"] = solve_count;
    j["completed"] = completed;
    j["best_unsolvable"] = best_unsolvable;
    j["bound"] = bound;
    j["stages"] = nlohmann::ordered_json::array();
    for (const auto& s : stages) j["stages"].push_back(stage_to_json(s));
    return j.dump(2) + "\n";
}

search_report search_report::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("search report JSON is malformed: ") + e.what());
    }
    if (!j.is_object() || j.value("schema", 0) != 1)
        throw config_error("search report JSON has an unsupported schema");
    search_report r;
    r.mode = j.at("mode").get<std::string>();
    r.graph_g = j.at("graph_g").get<std::string>();
    r.graph_h = j.at("graph_h").get<std::string>();
    r.root_count = j.at("root_count").get<int>();
    r.solve_count = j.at("solve_count").get<int>();
    r.completed = j.at("completed").get<bool>();
    r.best_unsolvable = j.at("best_unsolvable").get<std::int64_t>();
    r.bound = j.at("bound").get<std::int64_t>();
    for (const auto& js : j.at("stages")) {
        stage_record s;
        s.gap_index = js.at("gap_index").get<int>();
        s.root_g = js.at("root").at(0).get<int>() - 1;
        s.root_h = js.at("root").at(1).get<int>() - 1;
        s.gap = js.at("gap").get<double>();
        s.status = status_from_name(js.at("status").get<std::string>());
        s.has_incumbent = js.at("has_incumbent").get<bool>();
        s.objective = js.at("objective").get<std::int64_t>();
        s.has_dual_bound = js.at("has_dual_bound").get<bool>();
        s.dual_bound = js.at("dual_bound").get<std::int64_t>();
        s.seconds = js.at("seconds").get<double>();
        r.stages.push_back(s);
    }
    return r;
}

namespace {

search_report load_cached(const std::string& cache_dir, const std::string& key) {
    search_report miss;
    miss.from_cache = false;
    if (cache_dir.empty()) return miss;
    std::ifstream in(cache_dir + "/" + key + ".json", std::ios::binary);
    if (!in) return miss;
    std::ostringstream buf;
    buf << in.rdbuf();
    search_report r = search_report::from_json(buf.str());
    r.from_cache = true;
    return r;
}

void store_cache(const std::string& cache_dir, const std::string& key,
                 const search_report& report) {
    if (cache_dir.empty() || !report.completed) return;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    if (ec) return;  // cache is best-effort
    std::ofstream out(cache_dir + "/" + key + ".json", std::ios::binary | std::ios::trunc);
    if (out) {
        const std::string text = report.to_json();
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
}

void validate_search_options(const search_options& opts) {
    if (opts.workdir.empty()) throw config_error("search requires a work directory");
    if (opts.jobs < 1) throw config_error("--jobs must be at least 1");
}

}  // namespace

search_report run_root_search(const graph& g, const graph& h, const pebbling_profile& pg,
                              const pebbling_profile& ph, const backend_probe& backend,
                              const search_options& opts) {
    validate_search_options(opts);
    const std::vector<double> schedule = validate_gap_schedule(opts.gap_schedule);
    const std::vector<root_candidate> roots = candidate_roots(g, h);

    const std::string key =
        cache_key("orbit-search", g, h, pg, ph, opts.policy, schedule, backend);
    if (search_report cached = load_cached(opts.cache_dir, key); cached.from_cache)
        return cached;

    search_engine eng{g, h, pg, ph, backend, opts, {}, -1, now_seconds()};
    eng.report.mode = "orbit-search";
    eng.report.graph_g = g.name;
    eng.report.graph_h = h.name;
    eng.report.root_count = static_cast<int>(roots.size());

    const std::size_t n = roots.size();
    std::vector<std::int64_t> upper(n, 0);
    std::vector<char> upper_valid(n, 0), exact(n, 0);

    auto stage_dir = [](const root_candidate& r, const std::string& tag) {
        return "root_" + std::to_string(r.root_g + 1) + "_" + std::to_string(r.root_h + 1) +
               "/" + tag;
    };

    // Exact anchor on the first root seeds N, so the relaxed sweeps can
    // prune aggressively from the start.
    bool anchor_valid = false;
    bool ok = eng.step(roots[0].root_g, roots[0].root_h, 0.0, -1, stage_dir(roots[0], "anchor"),
                       upper[0], anchor_valid);
    upper_valid[0] = anchor_valid ? 1 : 0;
    exact[0] = ok ? 1 : 0;

    if (ok) {
        for (std::size_t si = 0; si < schedule.size() && ok; ++si) {
            const double gap = schedule[si];
            for (std::size_t i = 1; i < n; ++i) {
                if (exact[i]) continue;
                if (upper_valid[i] && upper[i] <= eng.best) continue;  // dominated
                if (!eng.budget_left()) {
                    ok = false;
                    break;
                }
                bool uv = false;
                std::int64_t u = 0;
                const bool step_ok = eng.step(roots[i].root_g, roots[i].root_h, gap,
                                              static_cast<int>(si),
                                              stage_dir(roots[i], "stage_" + std::to_string(si)),
                                              u, uv);
                if (uv) {
                    upper[i] = u;
                    upper_valid[i] = 1;
                }
                if (!step_ok) {
                    ok = false;
                    break;
                }
                if (gap == 0.0) exact[i] = 1;
            }
        }
    }

    search_report report = std::move(eng.report);
    report.best_unsolvable = eng.best;
    report.completed = ok;
    if (ok) report.bound = 1 + eng.best;
    store_cache(opts.cache_dir, key, report);
    return report;
}

search_report run_exhaustive_baseline(const graph& g, const graph& h,
                                      const pebbling_profile& pg, const pebbling_profile& ph,
                                      const backend_probe& backend,
                                      const search_options& opts) {
    validate_search_options(opts);

    const std::string key = cache_key("exhaustive-baseline", g, h, pg, ph, opts.policy,
                                      {0.0}, backend);
    if (search_report cached = load_cached(opts.cache_dir, key); cached.from_cache)
        return cached;

    search_engine eng{g, h, pg, ph, backend, opts, {}, -1, now_seconds()};
    eng.report.mode = "exhaustive-baseline";
    eng.report.graph_g = g.name;
    eng.report.graph_h = h.name;
    eng.report.root_count = g.n * h.n;

    bool ok = true;
    for (int i = 0; i < g.n && ok; ++i)
        for (int j = 0; j < h.n; ++j) {
            if (!eng.budget_left()) {
                ok = false;
                break;
            }
            bool uv = false;
            std::int64_t u = 0;
            const std::string dir = "baseline_root_" + std::to_string(i + 1) + "_" +
                                    std::to_string(j + 1);
            if (!eng.step(i, j, 0.0, 0, dir, u, uv)) {
                ok = false;
                break;
            }
        }

    search_report report = std::move(eng.report);
    report.best_unsolvable = eng.best;
    report.completed = ok;
    if (ok) report.bound = 1 + eng.best;
    store_cache(opts.cache_dir, key, report);
    return report;
}

}  // namespace pebble
