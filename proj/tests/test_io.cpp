#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <stdexcept>
#include <string>

#include "phirho/families.hpp"
#include "phirho/io.hpp"
#include "phirho/rearrange.hpp"
#include "phirho/segment_map.hpp"

using namespace phirho;

TEST_CASE("permutation records round trip") {
    const Permutation p = Permutation::validated(8, {4, 7, 8, 1, 6, 5, 2, 3});
    const std::string text = permutation_json(p);
    CHECK(parse_permutation(text) == p);

    const std::vector<Permutation> list = parse_permutation_list(
        "[{\"n\": 2, \"pi\": [1, 2]}, {\"n\": 2, \"pi\": [2, 1]}]");
    REQUIRE(list.size() == 2);
    CHECK(list[1] == Permutation::validated(2, {2, 1}));
    // a single record also parses as a one-element list
    CHECK(parse_permutation_list(text).size() == 1);

    CHECK_THROWS_AS(parse_permutation("{\"n\": 2}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("{\"n\": 2, \"pi\": [1, 1]}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("not json"), std::invalid_argument);
}

TEST_CASE("segment map records round trip with signed unit slopes") {
    const SegmentMap m = SegmentMap::validated(
        {Piece{0, Rational(1, 2), -1, Rational(1, 2)}, Piece{Rational(1, 2), 1, 1, 0}});
    const std::string text = segment_map_json(m);
    CHECK(text.find("\"-1/1\"") != std::string::npos);
    const SegmentMap back = parse_segment_map(text);
    REQUIRE(back.pieces().size() == 2);
    CHECK(back.pieces()[0].slope == -1);
    CHECK(back.pieces()[0].intercept == Rational(1, 2));
    CHECK(phi_exact(back) == phi_exact(m));

    CHECK_THROWS_AS(
        parse_segment_map(
            "{\"pieces\": [{\"x_lo\": \"0/1\", \"x_hi\": \"1/1\", \"slope\": \"2/1\", "
            "\"intercept\": \"0/1\"}]}"),
        std::invalid_argument);
}

TEST_CASE("diagonal and slope-pattern records round trip") {
    const Diagonal d = rising_diagonal(Rational(1, 3)).diagonal;
    const Diagonal back = parse_diagonal(diagonal_json(d));
    CHECK(back.breakpoints() == d.breakpoints());
    CHECK(back.values() == d.values());

    const ZeroTwoDiagonal z = ZeroTwoDiagonal::from_pattern(12, "002022020022");
    const std::string text = zero_two_json(z);
    CHECK(text.find("002022020022") != std::string::npos);
    CHECK(parse_zero_two(text) == z);
    CHECK_THROWS_AS(parse_zero_two("{\"n\": 4, \"slopes\": \"0102\"}"), std::invalid_argument);
}

TEST_CASE("family specs") {
    CHECK(family_name(Family::c_alpha) == "c_alpha");
    CHECK(family_name(Family::rising) == "rising");
    CHECK(family_name(Family::plateau) == "plateau");
    CHECK(family_name(Family::interpolation) == "interpolation");
    CHECK(family_from_name("c_alpha") == Family::c_alpha);
    CHECK_THROWS_AS(family_from_name("gaussian"), std::invalid_argument);

    const FamilySpec spec{Family::plateau, Rational(1, 8)};
    const FamilySpec back = parse_family_spec(family_spec_json(spec));
    CHECK(back.family == Family::plateau);
    CHECK(back.parameter == Rational(1, 8));
}

TEST_CASE("input classification dispatches on fields") {
    CHECK(classify_input("{\"n\": 2, \"pi\": [1, 2]}") == InputKind::permutation);
    CHECK(classify_input("{\"pieces\": []}") == InputKind::segment_map);
    CHECK(classify_input("{\"breakpoints\": [], \"values\": []}") == InputKind::diagonal);
    CHECK(classify_input("{\"n\": 2, \"slopes\": \"02\"}") == InputKind::zero_two);
    CHECK(classify_input("{\"family\": \"rising\", \"parameter\": \"1/3\"}") ==
          InputKind::family_spec);
    CHECK(classify_input("[{\"n\": 2, \"pi\": [1, 2]}]") == InputKind::permutation);
    CHECK_THROWS_AS(classify_input("{\"rows\": 3}"), std::invalid_argument);
}

TEST_CASE("rearrangement report carries the pipeline result") {
    const Involution p = Involution::validated(8, {4, 7, 8, 1, 6, 5, 2, 3});
    const std::string text = rearrangement_report_json(p);
    CHECK(text.find("\"-5/16\"") != std::string::npos);
    CHECK(text.find("\"-13/32\"") != std::string::npos);
    CHECK(text.find("\"-53/64\"") != std::string::npos);
    CHECK(text.find("nested-block") != std::string::npos);
    CHECK(text.find("\"m_sign\": 1") != std::string::npos);
}

TEST_CASE("points CSV round-trips rational strings exactly") {
    std::vector<PointRow> rows;
    rows.push_back(PointRow{"2-1", Rational(-1, 2), Rational(-1, 2), true, false});
    rows.push_back(PointRow{"1-2", Rational(1), Rational(1), true, true});
    const std::string text = points_csv(rows);
    CHECK(text.find("label,phi,rho,phi_float,rho_float,upper_eq,lower_eq") == 0);
    CHECK(text.find("2-1,-1/2,-1/2,-0.5,-0.5,1,0") != std::string::npos);

    const std::vector<PointRow> back = parse_points_csv(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].phi == Rational(-1, 2));
    CHECK(back[1].label == "1-2");
    CHECK(back[1].upper_equality);
    CHECK(back[1].lower_equality);
    CHECK(points_csv(back) == text);  // byte-identical round trip

    CHECK_THROWS_AS(points_csv({PointRow{"a,b", Rational(0), Rational(0), false, false}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_points_csv("nope\n"), std::invalid_argument);
}

TEST_CASE("curves CSV round-trips binary64 exactly") {
    std::vector<CurveRow> rows;
    rows.push_back(CurveRow{"upper", -0.5, -0.5});
    rows.push_back(CurveRow{"upper", 1.0 / 3.0, 0.70123456789012341});
    const std::string text = curves_csv(rows);
    CHECK(text.rfind("# decimals", 0) == 0);
    const std::vector<CurveRow> back = parse_curves_csv(text);
    REQUIRE(back.size() == 2);
    CHECK(back[1].x == 1.0 / 3.0);
    CHECK(back[1].y == 0.70123456789012341);
    CHECK(curves_csv(back) == text);
}

TEST_CASE("format_double prints 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-0.5) == "-0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(151.0 / 216.0) == "0.69907407407407407");
}

TEST_CASE("file helpers") {
    const std::string path = "phirho_io_test_tmp.txt";
    write_file(path, "contents\n");
    CHECK(read_file(path) == "contents\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("does/not/exist.txt"), std::runtime_error);
}
