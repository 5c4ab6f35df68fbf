#include "pebble/solver.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "pebble/lp_writer.hpp"
#include "pebble/subprocess.hpp"
#include "pebble/util.hpp"

namespace pebble {

namespace {

constexpr solver_backend k_backend_order[] = {solver_backend::highs, solver_backend::cbc,
                                              solver_backend::scip, solver_backend::gurobi};

const char* backend_exe(solver_backend b) {
    switch (b) {
        case solver_backend::highs: return "highs";
        case solver_backend::cbc: return "cbc";
        case solver_backend::scip: return "scip";
        case solver_backend::gurobi: return "gurobi_cl";
    }
    return "";
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

bool contains(const std::string& hay, const char* needle) {
    return hay.find(needle) != std::string::npos;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Raw parse product of one backend's solution file.
struct parsed_solution {
    solve_status status = solve_status::error;
    bool has_solution = false;
    std::vector<std::pair<std::string, std::string>> values;  // name -> raw token
};

solve_status map_status_text(const std::string& text) {
    std::string t;
    for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (contains(t, "infeasible")) return solve_status::infeasible;
    if (contains(t, "unbounded")) return solve_status::unbounded;
    if (contains(t, "time limit")) return solve_status::time_limit;
    if (contains(t, "optimal")) return solve_status::optimal;
    if (contains(t, "feasible")) return solve_status::feasible;
    return solve_status::error;
}

parsed_solution parse_highs_sol(const std::string& text) {
    parsed_solution out;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (trim(lines[i]) == "Model status") {
            for (std::size_t j = i + 1; j < lines.size(); ++j)
                if (!trim(lines[j]).empty()) {
                    out.status = map_status_text(trim(lines[j]));
                    break;
                }
            break;
        }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (trim(lines[i]) != "# Primal solution values") continue;
        std::size_t j = i + 1;
        while (j < lines.size() && trim(lines[j]).empty()) ++j;
        if (j >= lines.size() || trim(lines[j]) != "Feasible") break;
        out.has_solution = true;
        for (++j; j < lines.size(); ++j) {
            const std::string line = trim(lines[j]);
            if (line.empty()) continue;
            if (line[0] == '#') {
                if (line.rfind("# Columns", 0) == 0) continue;  // column count header
                break;                                          // rows / duals / basis follow
            }
            if (line.rfind("Objective", 0) == 0) continue;
            const auto toks = split_ws(line);
            if (toks.size() >= 2) out.values.emplace_back(toks[0], toks[1]);
        }
        break;
    }
    return out;
}

parsed_solution parse_cbc_sol(const std::string& text) {
    parsed_solution out;
    const auto lines = split_lines(text);
    if (lines.empty()) return out;
    const std::string head = trim(lines[0]);
    out.status = map_status_text(head);
    // CBC reports "Stopped on time limit - objective value 1e+50" when no
    // incumbent exists; genuine solutions list rows "index name value ...".
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto toks = split_ws(lines[i]);
        if (toks.size() >= 3) out.values.emplace_back(toks[1], toks[2]);
    }
    out.has_solution = out.status == solve_status::optimal ||
                       ((out.status == solve_status::time_limit ||
                         out.status == solve_status::feasible) &&
                        !out.values.empty());
    return out;
}

parsed_solution parse_scip_sol(const std::string& text) {
    parsed_solution out;
    const auto lines = split_lines(text);
    bool no_solution = false;
    for (const auto& raw : lines) {
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.rfind("solution status:", 0) == 0) {
            const std::string rest = trim(line.substr(16));
            out.status = map_status_text(rest);
            if (contains(rest, "no solution")) no_solution = true;
            continue;
        }
        if (contains(line, "no solution available")) {
            no_solution = true;
            continue;
        }
        if (line.rfind("objective value:", 0) == 0) continue;
        const auto toks = split_ws(line);
        if (toks.size() >= 2 && toks[0][0] == 'v') out.values.emplace_back(toks[0], toks[1]);
    }
    out.has_solution = !no_solution && (out.status == solve_status::optimal ||
                                        out.status == solve_status::feasible ||
                                        out.status == solve_status::time_limit);
    return out;
}

parsed_solution parse_gurobi_sol(const std::string& text, const std::string& log) {
    parsed_solution out;
    if (contains(log, "Model is infeasible"))
        out.status = solve_status::infeasible;
    else if (contains(log, "Model is unbounded") || contains(log, "infeasible or unbounded"))
        out.status = solve_status::unbounded;
    else if (contains(log, "Optimal solution found"))
        out.status = solve_status::optimal;
    else if (contains(log, "Time limit reached"))
        out.status = solve_status::time_limit;
    else if (contains(log, "Solution count 0"))
        out.status = solve_status::error;
    for (const auto& raw : split_lines(text)) {
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto toks = split_ws(line);
        if (toks.size() >= 2) out.values.emplace_back(toks[0], toks[1]);
    }
    out.has_solution = !out.values.empty() && out.status != solve_status::infeasible &&
                       out.status != solve_status::unbounded;
    return out;
}

// Last numeric token following `key` anywhere in the log, parsed exactly.
bool find_dual_bound(const std::string& log, const char* key, rational& out) {
    std::size_t pos = 0, found = std::string::npos;
    while ((pos = log.find(key, pos)) != std::string::npos) {
        found = pos;
        pos += 1;
    }
    if (found == std::string::npos) return false;
    std::size_t p = found + std::string(key).size();
    while (p < log.size() && (log[p] == ' ' || log[p] == ':' || log[p] == '=' || log[p] == '\t'))
        ++p;
    std::string tok;
    while (p < log.size() && !std::isspace(static_cast<unsigned char>(log[p])) && log[p] != ',' &&
           log[p] != '%')
        tok += log[p++];
    if (tok.empty()) return false;
    try {
        out = rational::parse_decimal(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool extract_dual_bound(solver_backend b, const std::string& log, std::int64_t& dual_floor) {
    rational r;
    bool ok = false;
    switch (b) {
        case solver_backend::highs: ok = find_dual_bound(log, "Dual bound", r); break;
        case solver_backend::cbc:
            ok = find_dual_bound(log, "best possible", r) ||
                 find_dual_bound(log, "Lower bound:", r);
            break;
        case solver_backend::scip: ok = find_dual_bound(log, "Dual Bound", r); break;
        case solver_backend::gurobi: ok = find_dual_bound(log, "best bound", r); break;
    }
    if (!ok) return false;
    dual_floor = r.floor();
    return true;
}

std::int64_t integral_value(const std::string& name, const std::string& token) {
    rational r;
    try {
        r = rational::parse_decimal(token);
    } catch (const std::exception& e) {
        throw integrity_error("solution value for " + name + " ('" + token +
                              "') is not parseable: " + e.what());
    }
    const double approx = r.to_double();
    if (std::abs(approx) > 9e15)
        throw integrity_error("solution value for " + name + " ('" + token +
                              "') has implausible magnitude");
    const std::int64_t nearest = std::llround(approx);
    const rational diff = r - rational(nearest);
    const rational tol(1, 1000000);
    if (diff > tol || rational(0) - diff > tol)
        throw integrity_error("solution value for " + name + " ('" + token +
                              "') is not integral within 1e-6");
    return nearest;
}

}  // namespace

const char* backend_name(solver_backend b) {
    switch (b) {
        case solver_backend::highs: return "highs";
        case solver_backend::cbc: return "cbc";
        case solver_backend::scip: return "scip";
        case solver_backend::gurobi: return "gurobi";
    }
    return "?";
}

std::optional<solver_backend> backend_from_name(const std::string& name) {
    for (solver_backend b : k_backend_order)
        if (name == backend_name(b)) return b;
    if (name == "gurobi_cl") return solver_backend::gurobi;
    return std::nullopt;
}

const char* status_name(solve_status s) {
    switch (s) {
        case solve_status::optimal: return "optimal";
        case solve_status::feasible: return "feasible";
        case solve_status::infeasible: return "infeasible";
        case solve_status::time_limit: return "time-limit";
        case solve_status::unbounded: return "unbounded";
        case solve_status::error: return "error";
    }
    return "?";
}

std::vector<backend_probe> probe_backends() {
    std::vector<backend_probe> found;
    const char* path_env = std::getenv("PATH");
    if (!path_env) return found;
    std::vector<std::string> dirs;
    {
        std::string cur;
        for (const char* p = path_env;; ++p) {
            if (*p == ':' || *p == '\0') {
                if (!cur.empty()) dirs.push_back(cur);
                cur.clear();
                if (*p == '\0') break;
            } else {
                cur += *p;
            }
        }
    }
    for (solver_backend b : k_backend_order) {
        for (const auto& dir : dirs) {
            const std::string candidate = dir + "/" + backend_exe(b);
            if (::access(candidate.c_str(), X_OK) == 0) {
                found.push_back({b, candidate});
                break;
            }
        }
    }
    return found;
}

backend_probe select_backend(const std::string& request) {
    const auto available = probe_backends();
    std::string want = request;
    if (want.empty() || want == "auto") {
        const char* env = std::getenv("PEBBLEBOUND_SOLVER");
        if (env && *env) want = env;
    }
    if (want.empty() || want == "auto") {
        if (available.empty())
            throw solver_error(
                "no MILP solver found on PATH (looked for highs, cbc, scip, gurobi_cl)");
        return available.front();
    }
    const auto b = backend_from_name(want);
    if (!b) throw config_error("unknown solver '" + want + "' (use highs, cbc, scip or gurobi)");
    for (const auto& probe : available)
        if (probe.backend == *b) return probe;
    throw solver_error("solver '" + want + "' is not on PATH");
}

solve_result parse_solver_output(const product_model& m, solver_backend backend,
                                 const std::string& sol_text, const std::string& log_text) {
    parsed_solution parsed;
    switch (backend) {
        case solver_backend::highs: parsed = parse_highs_sol(sol_text); break;
        case solver_backend::cbc: parsed = parse_cbc_sol(sol_text); break;
        case solver_backend::scip: parsed = parse_scip_sol(sol_text); break;
        case solver_backend::gurobi: parsed = parse_gurobi_sol(sol_text, log_text); break;
    }

    solve_result res;
    res.status = parsed.status;
    res.has_dual_bound = extract_dual_bound(backend, log_text, res.dual_bound);

    if (parsed.has_solution) {
        std::unordered_map<std::string, int> index;
        index.reserve(m.catalog.vars.size() * 2);
        for (std::size_t i = 0; i < m.catalog.vars.size(); ++i)
            index.emplace(m.catalog.vars[i].name, static_cast<int>(i));

        std::vector<std::int64_t> assignment(m.catalog.vars.size(), 0);
        for (const auto& [name, token] : parsed.values) {
            const auto it = index.find(name);
            if (it == index.end())
                throw integrity_error("solution mentions unknown variable '" + name + "'");
            assignment[it->second] = integral_value(name, token);
        }

        const feasibility_report rep = check_feasibility(m, assignment);
        if (!rep.feasible) {
            std::string msg = "solver incumbent fails exact feasibility re-check:";
            for (std::size_t i = 0; i < rep.violations.size() && i < 3; ++i)
                msg += " [" + rep.violations[i] + "]";
            if (rep.violations.size() > 3)
                msg += " (+" + std::to_string(rep.violations.size() - 3) + " more)";
            throw integrity_error(msg);
        }
        res.has_incumbent = true;
        res.incumbent = std::move(assignment);
        res.objective = rep.objective;
    }
    return res;
}

solve_result solve_model(const product_model& m, const backend_probe& backend,
                         const solve_options& opts) {
    namespace fs = std::filesystem;
    if (opts.workdir.empty()) throw config_error("solve_model requires a work directory");
    std::error_code ec;
    fs::create_directories(opts.workdir, ec);
    if (ec)
        throw solver_error("cannot create work directory '" + opts.workdir +
                           "': " + ec.message());

    const std::string lp_path = opts.workdir + "/model.lp";
    const std::string sol_path = opts.workdir + "/model.sol";
    const std::string log_path = opts.workdir + "/solver.log";
    write_lp_file(m, lp_path);
    std::error_code rmec;
    fs::remove(sol_path, rmec);  // never parse a stale solution

    std::vector<std::string> argv;
    switch (backend.backend) {
        case solver_backend::highs: {
            const std::string opt_path = opts.workdir + "/highs_options.txt";
            std::ofstream f(opt_path, std::ios::trunc);
            f << "mip_rel_gap = " << fmt_double(opts.rel_gap) << "\n";
            if (opts.time_limit_s > 0) f << "time_limit = " << fmt_double(opts.time_limit_s) << "\n";
            f << "threads = " << opts.threads << "\n";
            if (!f) throw solver_error("cannot write HiGHS options file");
            argv = {backend.path, lp_path, "--options_file", opt_path, "--solution_file",
                    sol_path};
            break;
        }
        case solver_backend::cbc: {
            argv = {backend.path, lp_path, "ratioGap", fmt_double(opts.rel_gap)};
            if (opts.time_limit_s > 0) {
                argv.push_back("seconds");
                argv.push_back(fmt_double(opts.time_limit_s));
            }
            if (opts.threads > 1) {
                argv.push_back("threads");
                argv.push_back(std::to_string(opts.threads));
            }
            argv.push_back("solve");
            argv.push_back("solution");
            argv.push_back(sol_path);
            break;
        }
        case solver_backend::scip: {
            argv = {backend.path, "-c", "read " + lp_path};
            argv.push_back("-c");
            argv.push_back("set limits gap " + fmt_double(opts.rel_gap));
            if (opts.time_limit_s > 0) {
                argv.push_back("-c");
                argv.push_back("set limits time " + fmt_double(opts.time_limit_s));
            }
            argv.push_back("-c");
            argv.push_back("optimize");
            argv.push_back("-c");
            argv.push_back("write solution " + sol_path);
            argv.push_back("-c");
            argv.push_back("quit");
            break;
        }
        case solver_backend::gurobi: {
            argv = {backend.path, "Threads=" + std::to_string(opts.threads),
                    "MIPGap=" + fmt_double(opts.rel_gap)};
            if (opts.time_limit_s > 0) argv.push_back("TimeLimit=" + fmt_double(opts.time_limit_s));
            argv.push_back("ResultFile=" + sol_path);
            argv.push_back(lp_path);
            break;
        }
    }

    // The solver enforces its own time limit; the hard kill is a safety
    // net for hung processes only.
    const double hard_kill =
        opts.time_limit_s > 0 ? opts.time_limit_s * 3 + 30 : 0.0;
    const subprocess_result proc = run_process(argv, log_path, hard_kill);

    std::string sol_text;
    {
        std::ifstream in(sol_path, std::ios::binary);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            sol_text = buf.str();
        }
    }

    solve_result res = parse_solver_output(m, backend.backend, sol_text, proc.output);
    res.lp_path = lp_path;
    res.sol_path = sol_path;
    res.log_path = log_path;

    if (res.status == solve_status::optimal && !res.has_dual_bound && opts.rel_gap == 0.0) {
        // Proven optimal with no explicit bound line: the bound equals the
        // exactly re-verified incumbent value.
        res.has_dual_bound = true;
        res.dual_bound = res.objective;
    }

    if (res.status == solve_status::error) {
        if (proc.timed_out) {
            res.status = solve_status::time_limit;
        } else {
            std::string tail = proc.output.size() > 400
                                   ? proc.output.substr(proc.output.size() - 400)
                                   : proc.output;
            throw solver_error("solver run produced no recognizable result (exit code " +
                               std::to_string(proc.exit_code) + "); log tail: " + tail);
        }
    }
    return res;
}

}  // namespace pebble
