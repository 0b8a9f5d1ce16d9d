#include "nilstalk/render.hpp"

#include <sstream>
#include <stdexcept>

namespace nilstalk {

OutputFormat parse_format(const std::string& text) {
    if (text == "table") return OutputFormat::Table;
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("bad format '" + text + "' (expected table, json or csv)");
}

nlohmann::json to_json(const FGAbGroup& g) {
    return {{"rank", g.rank}, {"torsion", g.torsion}};
}

nlohmann::json to_json(const GradedGroup& g) {
    nlohmann::json groups = nlohmann::json::object();
    for (const auto& [d, fg] : g.groups())
        groups[std::to_string(d)] = to_json(fg);
    return {{"coefficients", g.coefficients().to_string()}, {"groups", groups}};
}

nlohmann::json to_json(const StalkTable& t) {
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& s : t.strata) {
        nlohmann::json groups = nlohmann::json::object();
        for (const auto& [d, fg] : s.stalk.groups())
            groups[std::to_string(d)] = to_json(fg);
        strata.push_back({{"label", s.orbit.to_string()},
                          {"dim", s.dim},
                          {"groups", groups}});
    }
    return {{"case", t.case_name},
            {"coefficients", t.coefficients.to_string()},
            {"perversity", to_string(t.perversity)},
            {"strata", strata}};
}

nlohmann::json to_json(const DecompositionMatrix& d) {
    auto labels = [](const std::vector<Partition>& ps) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : ps) a.push_back(p.to_string());
        return a;
    };
    return {{"rows", labels(d.rows)},
            {"cols", labels(d.cols)},
            {"entries", d.entries},
            {"form", d.symmetric_group_form ? "symmetric-group" : "orbit"}};
}

nlohmann::json to_json(const QPolynomial& p) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [e, c] : p.coefficients())
        out[std::to_string(e)] = c;
    return out;
}

std::string render_line(const GradedGroup& g) {
    if (g.is_zero()) return "0";
    std::string out;
    for (const auto& [d, fg] : g.groups()) {
        if (!out.empty()) out += " + ";
        out += fg.to_string(g.coefficients()) + "@" + std::to_string(d);
    }
    return out;
}

std::string render_table(const StalkTable& t) {
    std::ostringstream os;
    os << "case: " << t.case_name << "  coeff: " << t.coefficients.to_string()
       << "  perversity: " << to_string(t.perversity) << "\n";
    for (const auto& s : t.strata)
        os << s.orbit.to_string() << "\tdim " << s.dim << "\t"
           << render_line(s.stalk) << "\n";
    return os.str();
}

std::string render_table(const DecompositionMatrix& d) {
    auto label = [&](const Partition& p, bool row) {
        if (!d.symmetric_group_form) return p.to_string();
        return (row ? "S(" : "D(") + p.to_string() + ")";
    };
    std::vector<std::string> col_heads;
    std::size_t wlabel = 0;
    for (std::size_t r = 0; r < d.rows.size(); ++r)
        wlabel = std::max(wlabel, label(d.rows[r], true).size());
    std::vector<std::size_t> wcol;
    for (const auto& c : d.cols) {
        col_heads.push_back(label(c, false));
        wcol.push_back(col_heads.back().size());
    }
    std::ostringstream os;
    os << std::string(wlabel, ' ');
    for (std::size_t c = 0; c < col_heads.size(); ++c)
        os << "  " << col_heads[c];
    os << "\n";
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
        std::string head = label(d.rows[r], true);
        os << head << std::string(wlabel - head.size(), ' ');
        for (std::size_t c = 0; c < d.cols.size(); ++c) {
            std::string v = std::to_string(d.entries[r][c]);
            os << "  " << std::string(wcol[c] > v.size() ? wcol[c] - v.size() : 0, ' ')
               << v;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

std::string torsion_field(const FGAbGroup& g) {
    std::string out;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(g.torsion[i]);
    }
    return out;
}

}  // namespace

std::string render_csv(const GradedGroup& g) {
    std::ostringstream os;
    os << "degree,rank,torsion\n";
    for (const auto& [d, fg] : g.groups())
        os << d << "," << fg.rank << "," << torsion_field(fg) << "\n";
    return os.str();
}

std::string render_csv(const StalkTable& t) {
    std::ostringstream os;
    os << "stratum,dim,degree,rank,torsion\n";
    for (const auto& s : t.strata)
        for (const auto& [d, fg] : s.stalk.groups())
            os << "\"" << s.orbit.to_string() << "\"," << s.dim << "," << d << ","
               << fg.rank << "," << torsion_field(fg) << "\n";
    return os.str();
}

std::string render_csv(const DecompositionMatrix& d) {
    std::ostringstream os;
    os << "row";
    for (const auto& c : d.cols) os << ",\"" << c.to_string() << "\"";
    os << "\n";
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
        os << "\"" << d.rows[r].to_string() << "\"";
        for (auto v : d.entries[r]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const QPolynomial& p) {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (const auto& [e, c] : p.coefficients()) os << e << "," << c << "\n";
    return os.str();
}

}  // namespace nilstalk
