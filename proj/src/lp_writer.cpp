#include "pebble/lp_writer.hpp"

#include <fstream>

#include "pebble/util.hpp"

namespace pebble {

namespace {

// Appends one signed term, wrapping roughly every 10 terms so no line in
// the file grows unboundedly (some LP readers cap line length).
void append_term(std::string& out, std::int64_t coef, const std::string& name, bool first,
                 int& terms_on_line) {
    if (terms_on_line >= 10) {
        out += "\n ";
        terms_on_line = 0;
    }
    if (first) {
        if (coef < 0) out += "- ";
    } else {
        out += coef < 0 ? " - " : " + ";
    }
    const std::int64_t mag = coef < 0 ? -coef : coef;
    if (mag != 1) {
        out += std::to_string(mag);
        out += " ";
    }
    out += name;
    ++terms_on_line;
}

}  // namespace

std::string write_lp(const product_model& m) {
    const auto& cat = m.catalog;
    std::string out;
    out.reserve(1 << 20);

    out += "\\ product pebbling bound: ";
    out += m.g.name;
    out += " x ";
    out += m.h.name;
    out += " root (";
    out += std::to_string(m.params.root_g + 1);
    out += ",";
    out += std::to_string(m.params.root_h + 1);
    out += ")\n";

    out += "Maximize\n obj: ";
    {
        int terms_on_line = 0;
        for (int idx = 0; idx < cat.n_c; ++idx)
            append_term(out, 1, cat.vars[cat.c0_ + idx].name, idx == 0, terms_on_line);
    }
    out += "\n";

    out += "Subject To\n";
    for (const auto& con : m.constraints) {
        out += " ";
        out += con.label;
        out += ": ";
        int terms_on_line = 0;
        for (std::size_t i = 0; i < con.terms.size(); ++i)
            append_term(out, con.terms[i].coef, cat.vars[con.terms[i].var].name, i == 0,
                        terms_on_line);
        switch (con.dir) {
            case sense::le: out += " <= "; break;
            case sense::ge: out += " >= "; break;
            case sense::eq: out += " = "; break;
        }
        out += std::to_string(con.rhs);
        out += "\n";
    }

    out += "Generals\n";
    {
        int on_line = 0;
        for (const auto& v : cat.vars)
            if (v.kind == var_kind::integer) {
                out += " ";
                out += v.name;
                if (++on_line >= 8) {
                    out += "\n";
                    on_line = 0;
                }
            }
        if (on_line) out += "\n";
    }

    out += "Binaries\n";
    {
        int on_line = 0;
        for (const auto& v : cat.vars)
            if (v.kind == var_kind::binary) {
                out += " ";
                out += v.name;
                if (++on_line >= 8) {
                    out += "\n";
                    on_line = 0;
                }
            }
        if (on_line) out += "\n";
    }

    out += "End\n";
    return out;
}

void write_lp_file(const product_model& m, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw config_error("cannot write LP file '" + path + "'");
    const std::string text = write_lp(m);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw config_error("failed writing LP file '" + path + "'");
}

}  // namespace pebble
