#pragma once

#include <string>

#include "pebble/model.hpp"

namespace pebble {

// Renders the model in CPLEX LP format. Output is a pure function of the
// model: fixed ordering, integer coefficients, no timestamps — identical
// models produce byte-identical text.
std::string write_lp(const product_model& m);

void write_lp_file(const product_model& m, const std::string& path);

}  // namespace pebble
