#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "zalpha/io.hpp"

using namespace zt;

TEST_CASE("integer and rational literals") {
    CHECK(parse_int("12345678901234567890123456789") ==
          Int("12345678901234567890123456789"));
    CHECK(parse_int("-7") == -7);
    CHECK(parse_int(" 42 ") == 42);  // whitespace-insensitive
    CHECK_THROWS_AS(parse_int("12x"), ParseError);
    CHECK_THROWS_AS(parse_int(""), ParseError);

    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("6/8") == Rat(3, 4));  // canonicalized
    CHECK(parse_rat("-5") == Rat(-5));
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);

    CHECK(rat_to_string(Rat(3, 4)) == "3/4");
    CHECK(rat_to_string(Rat(7)) == "7");
}

TEST_CASE("field round-trip") {
    Json j = field_to_json(sqrt2());
    auto f = field_from_json(j);
    CHECK(f->degree() == 2);
    CHECK(f->min_poly() == sqrt2().min_poly());
    CHECK(f->isolating_interval() == sqrt2().isolating_interval());
    CHECK(field_to_json(*f) == j);
}

TEST_CASE("field parse errors") {
    CHECK_THROWS_AS(field_from_json(Json::parse(R"({"min_poly": []})")), ParseError);
    CHECK_THROWS_AS(field_from_json(Json::parse(R"({"min_poly": ["-2","0"]})")), ParseError);
    CHECK_THROWS_AS(
        field_from_json(Json::parse(R"({"min_poly": [2, 0], "interval": ["1","2"]})")),
        ParseError);  // integers must be strings
}

TEST_CASE("element round-trip") {
    const Field& f = plastic();
    Elem e = E(f, {-3, 0, 12345});
    CHECK(elem_from_json(f, elem_to_json(f, e)) == e);
    CHECK_THROWS_AS(elem_from_json(f, Json::parse(R"(["1","2"])")), ParseError);
}

TEST_CASE("matrix round-trip with embedded field") {
    const Field& f = sqrt2();
    MatrixZA m(f, 2, 2);
    m.at(0, 0) = E(f, {1, 1});
    m.at(1, 1) = E(f, {-2, 7});
    Json j = matrix_to_json(m);
    LoadedMatrix lm = matrix_from_json(j, "");
    CHECK(lm.mat.rows == 2);
    CHECK(lm.mat.cols == 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t k = 0; k < 2; ++k) CHECK(lm.mat.at(i, k).c == m.at(i, k).c);
    CHECK(matrix_to_json(lm.mat) == j);
}

TEST_CASE("matrix file with a field path") {
    std::string dir = "io_test_tmp";
    std::filesystem::create_directory(dir);
    {
        std::ofstream out(dir + "/field.json");
        out << field_to_json(sqrt2());
        std::ofstream mout(dir + "/mat.json");
        mout << R"({"field": "field.json", "rows": [[["1","0"],["0","1"]],[["0","1"],["1","0"]]]})";
    }
    LoadedMatrix lm = load_matrix(dir + "/mat.json");
    CHECK(lm.field->degree() == 2);
    CHECK(lm.mat.at(0, 1) == lm.field->alpha());
    std::filesystem::remove_all(dir);
}

TEST_CASE("matrix parse errors") {
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": [[["1","0"]]]})"), ""),
                    ParseError);  // no field anywhere
    auto f = field_from_json(field_to_json(sqrt2()));
    CHECK_THROWS_AS(
        matrix_from_json(Json::parse(R"({"rows": [[["1","0"]],[["1","0"],["0","1"]]]})"), "", f),
        ParseError);  // ragged
    CHECK_THROWS_AS(load_matrix("definitely_missing.json"), ParseError);
}
