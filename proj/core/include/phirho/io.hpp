#pragma once

// File formats: JSON records for permutations, segment maps, diagonals and
// family specs; CSV for region points and boundary curves.  All rationals
// travel as "num/den" strings, doubles as 17-significant-digit decimals.

#include <string>
#include <vector>

#include "phirho/diagonals.hpp"
#include "phirho/rational.hpp"
#include "phirho/segment_map.hpp"
#include "phirho/shuffles.hpp"

namespace phirho {

std::string permutation_json(const Permutation& p);
Permutation parse_permutation(const std::string& text);
// Accepts a single record or an array of records.
std::vector<Permutation> parse_permutation_list(const std::string& text);

std::string segment_map_json(const SegmentMap& m);
SegmentMap parse_segment_map(const std::string& text);

std::string diagonal_json(const Diagonal& d);
Diagonal parse_diagonal(const std::string& text);

std::string zero_two_json(const ZeroTwoDiagonal& d);
ZeroTwoDiagonal parse_zero_two(const std::string& text);

enum class Family { c_alpha, rising, plateau, interpolation };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct FamilySpec {
    Family family = Family::c_alpha;
    Rational parameter;  // interpolation stores its block count as n/1
};

std::string family_spec_json(const FamilySpec& s);
FamilySpec parse_family_spec(const std::string& text);

// Runs the rearrangement pipeline on `input` and reports both permutations,
// phi, rho before/after, the sign of the lower-bound slack and the class of
// the output.
std::string rearrangement_report_json(const Involution& input);

enum class InputKind { permutation, segment_map, diagonal, zero_two, family_spec };

// Dispatches on the fields present in a JSON record.
InputKind classify_input(const std::string& text);

struct PointRow {
    std::string label;  // must not contain commas
    Rational phi;
    Rational rho;
    bool upper_equality = false;
    bool lower_equality = false;
};

// Columns: label,phi,rho,phi_float,rho_float,upper_eq,lower_eq.  The float
// columns are derived from the rationals on write and ignored on parse, so
// write/parse round-trips reproduce identical rational strings.
std::string points_csv(const std::vector<PointRow>& rows);
std::vector<PointRow> parse_points_csv(const std::string& text);

struct CurveRow {
    std::string curve;
    double x = 0.0;
    double y = 0.0;
};

std::string curves_csv(const std::vector<CurveRow>& rows);
std::vector<CurveRow> parse_curves_csv(const std::string& text);

// "%.17g": shortest decimal form that round-trips IEEE-754 binary64.
std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace phirho
