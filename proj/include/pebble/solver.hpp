#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pebble/model.hpp"

namespace pebble {

// External MILP solvers driven through their command-line interfaces.
enum class solver_backend { highs, cbc, scip, gurobi };

const char* backend_name(solver_backend b);
std::optional<solver_backend> backend_from_name(const std::string& name);

struct backend_probe {
    solver_backend backend;
    std::string path;  // resolved executable path
};

// Scans PATH for the known solver CLIs (highs, cbc, scip, gurobi_cl), in
// preference order.
std::vector<backend_probe> probe_backends();

// Resolves the backend to use: an explicit name must be installed; "auto"
// (or empty) honours PEBBLEBOUND_SOLVER when set and otherwise takes the
// first hit in preference order. Throws solver_error when nothing usable
// is found.
backend_probe select_backend(const std::string& request);

enum class solve_status { optimal, feasible, infeasible, time_limit, unbounded, error };
const char* status_name(solve_status s);

struct solve_options {
    double rel_gap = 0.0;       // relative MIP gap target (0 = exact)
    double time_limit_s = 0.0;  // <= 0: no limit
    int threads = 1;
    std::string workdir;        // receives model.lp, model.sol, solver.log
};

struct solve_result {
    solve_status status = solve_status::error;
    bool has_incumbent = false;
    std::vector<std::int64_t> incumbent;  // full catalog assignment (missing vars = 0)
    std::int64_t objective = 0;           // incumbent objective, recomputed exactly
    bool has_dual_bound = false;
    std::int64_t dual_bound = 0;          // floor of the solver's proven upper bound
    std::string lp_path, sol_path, log_path;
};

// Writes the LP into opts.workdir, runs the backend, then parses and
// re-verifies the answer. The incumbent must be integral within 1e-6 and
// exactly feasible for the model (pure integer arithmetic); anything else
// raises integrity_error, so a buggy or misparsed solver run can never
// masquerade as a valid bound.
solve_result solve_model(const product_model& m, const backend_probe& backend,
                         const solve_options& opts);

// Parse-and-verify stage of solve_model, exposed for fixture tests:
// sol_text is the backend's solution file, log_text its log output.
solve_result parse_solver_output(const product_model& m, solver_backend backend,
                                 const std::string& sol_text, const std::string& log_text);

}  // namespace pebble
