#include "phirho/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "phirho/rearrange.hpp"

namespace phirho {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

Rational rational_field(const json& j, const char* field) {
    return Rational::parse(j.at(field).get<std::string>());
}

Permutation permutation_from(const json& j) {
    int n = j.at("n").get<int>();
    auto pi = j.at("pi").get<std::vector<int>>();
    return Permutation::validated(n, std::move(pi));
}

}  // namespace

std::string permutation_json(const Permutation& p) {
    return dump(json{{"n", p.size()}, {"pi", p.image()}});
}

Permutation parse_permutation(const std::string& text) {
    try {
        return permutation_from(parse_json(text, "permutation record"));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("permutation record: ") + e.what());
    }
}

std::vector<Permutation> parse_permutation_list(const std::string& text) {
    json j = parse_json(text, "permutation records");
    try {
        std::vector<Permutation> out;
        if (j.is_array()) {
            out.reserve(j.size());
            for (const auto& rec : j) out.push_back(permutation_from(rec));
        } else {
            out.push_back(permutation_from(j));
        }
        return out;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("permutation records: ") + e.what());
    }
}

std::string segment_map_json(const SegmentMap& m) {
    json pieces = json::array();
    for (const Piece& p : m.pieces()) {
        pieces.push_back(json{{"x_lo", p.lo.str()},
                              {"x_hi", p.hi.str()},
                              {"slope", Rational(p.slope).str()},
                              {"intercept", p.intercept.str()}});
    }
    return dump(json{{"pieces", pieces}});
}

SegmentMap parse_segment_map(const std::string& text) {
    json j = parse_json(text, "segment map record");
    try {
        std::vector<Piece> pieces;
        for (const auto& rec : j.at("pieces")) {
            Rational slope = rational_field(rec, "slope");
            if (slope != Rational(1) && slope != Rational(-1))
                throw std::invalid_argument("segment map record: slope must be 1 or -1");
            pieces.push_back(Piece{rational_field(rec, "x_lo"), rational_field(rec, "x_hi"),
                                   slope.sign(), rational_field(rec, "intercept")});
        }
        return SegmentMap::validated(std::move(pieces));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("segment map record: ") + e.what());
    }
}

std::string diagonal_json(const Diagonal& d) {
    json xs = json::array();
    json ys = json::array();
    for (const Rational& x : d.breakpoints()) xs.push_back(x.str());
    for (const Rational& y : d.values()) ys.push_back(y.str());
    return dump(json{{"breakpoints", xs}, {"values", ys}});
}

Diagonal parse_diagonal(const std::string& text) {
    json j = parse_json(text, "diagonal record");
    try {
        std::vector<Rational> xs;
        std::vector<Rational> ys;
        for (const auto& x : j.at("breakpoints")) xs.push_back(Rational::parse(x.get<std::string>()));
        for (const auto& y : j.at("values")) ys.push_back(Rational::parse(y.get<std::string>()));
        return Diagonal::validated(std::move(xs), std::move(ys));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("diagonal record: ") + e.what());
    }
}

std::string zero_two_json(const ZeroTwoDiagonal& d) {
    return dump(json{{"n", d.cells()}, {"slopes", d.pattern()}});
}

ZeroTwoDiagonal parse_zero_two(const std::string& text) {
    json j = parse_json(text, "slope pattern record");
    try {
        return ZeroTwoDiagonal::from_pattern(j.at("n").get<int>(),
                                             j.at("slopes").get<std::string>());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("slope pattern record: ") + e.what());
    }
}

std::string family_name(Family f) {
    switch (f) {
        case Family::c_alpha: return "c_alpha";
        case Family::rising: return "rising";
        case Family::plateau: return "plateau";
        case Family::interpolation: return "interpolation";
    }
    throw std::logic_error("unreachable family tag");
}

Family family_from_name(const std::string& name) {
    if (name == "c_alpha") return Family::c_alpha;
    if (name == "rising") return Family::rising;
    if (name == "plateau") return Family::plateau;
    if (name == "interpolation") return Family::interpolation;
    throw std::invalid_argument("unknown family \"" + name + "\"");
}

std::string family_spec_json(const FamilySpec& s) {
    return dump(json{{"family", family_name(s.family)}, {"parameter", s.parameter.str()}});
}

FamilySpec parse_family_spec(const std::string& text) {
    json j = parse_json(text, "family spec");
    try {
        return FamilySpec{family_from_name(j.at("family").get<std::string>()),
                          Rational::parse(j.at("parameter").get<std::string>())};
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("family spec: ") + e.what());
    }
}

std::string rearrangement_report_json(const Involution& input) {
    Involution output = canonical_rearrangement(input);
    LowerSlack slack = lower_bound_slack(input);
    json j{{"input", {{"n", input.size()}, {"pi", input.image()}}},
           {"output", {{"n", output.size()}, {"pi", output.image()}}},
           {"phi", shuffle_phi(input).str()},
           {"rho_before", shuffle_rho(input).str()},
           {"rho_after", shuffle_rho(output).str()},
           {"m_sign", slack.sign},
           {"class", to_string(rearrangement_class(output))}};
    return dump(j);
}

InputKind classify_input(const std::string& text) {
    json j = parse_json(text, "input record");
    const json& probe = (j.is_array() && !j.empty()) ? j.front() : j;
    if (probe.contains("pi")) return InputKind::permutation;
    if (probe.contains("pieces")) return InputKind::segment_map;
    if (probe.contains("breakpoints")) return InputKind::diagonal;
    if (probe.contains("slopes")) return InputKind::zero_two;
    if (probe.contains("family")) return InputKind::family_spec;
    throw std::invalid_argument("input record: no recognized fields (expected one of pi, pieces, breakpoints, slopes, family)");
}

namespace {

std::vector<std::string> split_line(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_flag(const std::string& field, const char* what) {
    if (field == "1") return true;
    if (field == "0") return false;
    throw std::invalid_argument(std::string(what) + ": flag column must be 0 or 1, got \"" + field + "\"");
}

}  // namespace

std::string points_csv(const std::vector<PointRow>& rows) {
    std::ostringstream out;
    out << "label,phi,rho,phi_float,rho_float,upper_eq,lower_eq\n";
    for (const PointRow& r : rows) {
        if (r.label.find(',') != std::string::npos)
            throw std::invalid_argument("points csv: label contains a comma: \"" + r.label + "\"");
        out << r.label << ',' << r.phi.str() << ',' << r.rho.str() << ','
            << format_double(r.phi.to_double()) << ',' << format_double(r.rho.to_double()) << ','
            << (r.upper_equality ? '1' : '0') << ',' << (r.lower_equality ? '1' : '0') << '\n';
    }
    return out.str();
}

std::vector<PointRow> parse_points_csv(const std::string& text) {
    std::istringstream in(text);
    std::vector<PointRow> rows;
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // column names, checked loosely
            if (line.rfind("label,", 0) != 0)
                throw std::invalid_argument("points csv: missing header at line " + std::to_string(lineno));
            continue;
        }
        auto fields = split_line(line, ',');
        if (fields.size() != 7)
            throw std::invalid_argument("points csv: line " + std::to_string(lineno) + " has " +
                                        std::to_string(fields.size()) + " columns, expected 7");
        PointRow row;
        row.label = fields[0];
        row.phi = Rational::parse(fields[1]);
        row.rho = Rational::parse(fields[2]);
        // fields[3], fields[4] are the derived decimals
        row.upper_equality = parse_flag(fields[5], "points csv");
        row.lower_equality = parse_flag(fields[6], "points csv");
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw std::invalid_argument("points csv: empty input");
    return rows;
}

std::string curves_csv(const std::vector<CurveRow>& rows) {
    std::ostringstream out;
    out << "# decimals carry 17 significant digits: exact round-trip for IEEE-754 binary64\n";
    out << "curve,x,y\n";
    for (const CurveRow& r : rows)
        out << r.curve << ',' << format_double(r.x) << ',' << format_double(r.y) << '\n';
    return out.str();
}

std::vector<CurveRow> parse_curves_csv(const std::string& text) {
    std::istringstream in(text);
    std::vector<CurveRow> rows;
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("curve,", 0) != 0)
                throw std::invalid_argument("curves csv: missing header at line " + std::to_string(lineno));
            continue;
        }
        auto fields = split_line(line, ',');
        if (fields.size() != 3)
            throw std::invalid_argument("curves csv: line " + std::to_string(lineno) + " has " +
                                        std::to_string(fields.size()) + " columns, expected 3");
        CurveRow row;
        row.curve = fields[0];
        try {
            row.x = std::stod(fields[1]);
            row.y = std::stod(fields[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("curves csv: bad decimal at line " + std::to_string(lineno));
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw std::invalid_argument("curves csv: empty input");
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace phirho
