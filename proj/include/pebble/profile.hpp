#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pebble/graph.hpp"
#include "pebble/oracle.hpp"

namespace pebble {

// Everything the product model needs to know about one base graph. Tables
// may be absent for graphs with the two-pebbling property: the default
// requirement 2*pi - s + 1 is then a valid (exact-or-overestimating) bound
// for every support s, which is all the model's strategies rely on.
struct pebbling_profile {
    std::string name;
    int n = 0;
    int pi = 0;
    bool has_two_pebbling_property = false;
    std::vector<int> two_peb;      // [s] for s = 1..n; empty if not tabulated
    std::vector<int> two_peb_mon;  // weakly decreasing envelope, same shape

    bool has_tables() const { return !two_peb.empty(); }

    // Support sizes whose two-pebbling requirement deviates from the default
    // 2*pi - s + 1, plus the mandatory sentinel s = 0 (the model uses it to
    // lower an empty slice's requirement from 2*pi + 1 to 2*pi). Sorted.
    std::vector<int> correction_supports() const;
    std::vector<int> correction_supports_mon() const;

    // Deviation from the default at support s: -1 at the s = 0 sentinel,
    // two_peb[s] - (2*pi - s + 1) elsewhere.
    std::int64_t correction(int s) const;
    std::int64_t correction_mon(int s) const;

    void validate() const;  // throws config_error on malformed data
};

// Oracle-backed profile computation (always tabulates; subject to budget).
pebbling_profile compute_profile(const graph& g, const oracle_budget& budget = {},
                                 oracle_stats* stats = nullptr);

// JSON interchange:
//   {"schema": 1, "profiles": [{"name", "n", "pi", "has_2pp",
//                               "two_peb"?, "two_peb_mon"?}, ...]}
std::string profiles_to_json(const std::vector<pebbling_profile>& profiles);
std::vector<pebbling_profile> profiles_from_json(const std::string& text);
void save_profiles(const std::string& path, const std::vector<pebbling_profile>& profiles);
std::vector<pebbling_profile> load_profiles(const std::string& path);

}  // namespace pebble
