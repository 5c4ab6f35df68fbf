#include "pebble/profile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pebble/util.hpp"

namespace pebble {

namespace {

std::vector<int> deviating_supports(int n, int pi, const std::vector<int>& table) {
    std::vector<int> out{0};
    for (int s = 1; s <= n; ++s)
        if (table[s] != 2 * pi - s + 1) out.push_back(s);
    return out;
}

}  // namespace

std::vector<int> pebbling_profile::correction_supports() const {
    if (!has_tables()) return {0};
    return deviating_supports(n, pi, two_peb);
}

std::vector<int> pebbling_profile::correction_supports_mon() const {
    if (!has_tables()) return {0};
    return deviating_supports(n, pi, two_peb_mon);
}

std::int64_t pebbling_profile::correction(int s) const {
    if (s == 0) return -1;
    return two_peb[s] - (2 * pi - s + 1);
}

std::int64_t pebbling_profile::correction_mon(int s) const {
    if (s == 0) return -1;
    return two_peb_mon[s] - (2 * pi - s + 1);
}

void pebbling_profile::validate() const {
    if (n <= 0) throw config_error("profile '" + name + "': vertex count must be positive");
    if (pi < 1) throw config_error("profile '" + name + "': pebbling number must be at least 1");
    if (two_peb.empty() != two_peb_mon.empty())
        throw config_error("profile '" + name + "': two_peb and two_peb_mon must come together");
    if (!has_tables()) return;
    if (static_cast<int>(two_peb.size()) != n + 1 ||
        static_cast<int>(two_peb_mon.size()) != n + 1)
        throw config_error("profile '" + name + "': tables must have one entry per support 1..n");
    for (int s = 1; s <= n; ++s) {
        if (two_peb[s] < s)
            throw config_error("profile '" + name + "': two_peb[" + std::to_string(s) +
                               "] below the minimum possible size s");
        int suffix = two_peb[s];
        for (int t = s; t <= n; ++t) suffix = std::max(suffix, two_peb[t]);
        if (two_peb_mon[s] != suffix)
            throw config_error("profile '" + name + "': two_peb_mon[" + std::to_string(s) +
                               "] is not the max of two_peb over supports >= " + std::to_string(s));
    }
}

pebbling_profile compute_profile(const graph& g, const oracle_budget& budget,
                                 oracle_stats* stats) {
    pebbling_profile p;
    p.name = g.name;
    p.n = g.n;
    two_pebbling_tables t = two_pebbling_numbers(g, budget, stats);
    p.pi = t.pi;
    p.two_peb = t.by_support;
    p.two_peb_mon = t.monotone;
    p.has_two_pebbling_property = true;
    for (int s = 1; s <= g.n; ++s)
        if (t.by_support[s] > 2 * t.pi - s + 1) p.has_two_pebbling_property = false;
    p.validate();
    return p;
}

std::string profiles_to_json(const std::vector<pebbling_profile>& profiles) {
    nlohmann::ordered_json root;
    root["schema"] = 1;
    root["profiles"] = nlohmann::ordered_json::array();
    for (const auto& p : profiles) {
        nlohmann::ordered_json jp;
        jp["name"] = p.name;
        jp["n"] = p.n;
        jp["pi"] = p.pi;
        jp["has_2pp"] = p.has_two_pebbling_property;
        if (p.has_tables()) {
            jp["two_peb"] = std::vector<int>(p.two_peb.begin() + 1, p.two_peb.end());
            jp["two_peb_mon"] = std::vector<int>(p.two_peb_mon.begin() + 1, p.two_peb_mon.end());
        }
        root["profiles"].push_back(std::move(jp));
    }
    return root.dump(2) + "\n";
}

std::vector<pebbling_profile> profiles_from_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("profile JSON is malformed: ") + e.what());
    }
    if (!root.is_object() || root.value("schema", 0) != 1 || !root.contains("profiles"))
        throw config_error("profile JSON must be an object with schema 1 and a 'profiles' array");
    std::vector<pebbling_profile> out;
    for (const auto& jp : root["profiles"]) {
        pebbling_profile p;
        p.name = jp.value("name", "");
        if (p.name.empty()) throw config_error("profile entry without a name");
        p.n = jp.value("n", 0);
        p.pi = jp.value("pi", 0);
        p.has_two_pebbling_property = jp.value("has_2pp", false);
        if (jp.contains("two_peb") != jp.contains("two_peb_mon"))
            throw config_error("profile '" + p.name + "': two_peb and two_peb_mon must come together");
        if (jp.contains("two_peb")) {
            auto body = jp["two_peb"].get<std::vector<int>>();
            auto body_mon = jp["two_peb_mon"].get<std::vector<int>>();
            if (static_cast<int>(body.size()) != p.n || static_cast<int>(body_mon.size()) != p.n)
                throw config_error("profile '" + p.name + "': tables must list supports 1..n");
            p.two_peb.assign(1, 0);
            p.two_peb.insert(p.two_peb.end(), body.begin(), body.end());
            p.two_peb_mon.assign(1, 0);
            p.two_peb_mon.insert(p.two_peb_mon.end(), body_mon.begin(), body_mon.end());
        }
        p.validate();
        out.push_back(std::move(p));
    }
    return out;
}

void save_profiles(const std::string& path, const std::vector<pebbling_profile>& profiles) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write profile file '" + path + "'");
    out << profiles_to_json(profiles);
}

std::vector<pebbling_profile> load_profiles(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open profile file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return profiles_from_json(buf.str());
}

}  // namespace pebble
