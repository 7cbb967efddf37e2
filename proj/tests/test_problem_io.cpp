#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "subdiff/problem_io.hpp"
#include "subdiff/spectral_solver.hpp"

using namespace subdiff;

TEST_CASE("parse a minimal zero-forcing problem") {
    auto p = parse_problem(R"({"alpha":0.75,"T":1.0,"n_time":32,"L":3.14159,
                               "M":2,"g_coeffs":[1.0,-0.5],"forcing":"zero"})");
    CHECK(p.alpha.value == 0.75);
    CHECK(p.grid.cells == 32);
    CHECK(p.mode_count() == 2);
    CHECK(p.initial.coeffs[1] == -0.5);
    for (const auto& row : p.forcing.modes)
        for (double v : row) CHECK(v == 0.0);
}

TEST_CASE("constant forcing fills every mode row") {
    auto p = parse_problem(R"({"alpha":0.8,"T":2.0,"n_time":8,"L":1.0,
                               "M":2,"g_coeffs":[0.0,0.0],"forcing":{"constant":1.5}})");
    for (const auto& row : p.forcing.modes)
        for (double v : row) CHECK(v == 1.5);
}

TEST_CASE("sampled forcing is transferred row by row") {
    auto p = parse_problem(R"({"alpha":0.8,"T":1.0,"n_time":2,"L":1.0,
                               "M":2,"g_coeffs":[0.0,0.0],
                               "forcing":{"samples":[[1,2,3],[4,5,6]]}})");
    CHECK(p.forcing.modes[0][2] == 3.0);
    CHECK(p.forcing.modes[1][0] == 4.0);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_problem("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem(R"({"alpha":0.75})"), std::invalid_argument);
    // g_coeffs length mismatch
    CHECK_THROWS_AS(parse_problem(R"({"alpha":0.75,"T":1,"n_time":8,"L":1,"M":3,
                                      "g_coeffs":[1.0],"forcing":"zero"})"),
                    std::invalid_argument);
    // wrong sample row length
    CHECK_THROWS_AS(parse_problem(R"({"alpha":0.75,"T":1,"n_time":4,"L":1,"M":1,
                                      "g_coeffs":[1.0],"forcing":{"samples":[[1,2]]}})"),
                    std::invalid_argument);
    // unknown forcing string
    CHECK_THROWS_AS(parse_problem(R"({"alpha":0.75,"T":1,"n_time":4,"L":1,"M":1,
                                      "g_coeffs":[1.0],"forcing":"none"})"),
                    std::invalid_argument);
    // alpha outside the solver range
    CHECK_THROWS_AS(parse_problem(R"({"alpha":0.4,"T":1,"n_time":4,"L":1,"M":1,
                                      "g_coeffs":[1.0],"forcing":"zero"})"),
                    std::invalid_argument);
}

TEST_CASE("file loading") {
    const char* path = "test_problem_io_tmp.json";
    {
        std::ofstream out(path);
        out << R"({"alpha":0.75,"T":1.0,"n_time":16,"L":3.0,"M":1,"g_coeffs":[2.0],"forcing":"zero"})";
    }
    auto p = load_problem(path);
    CHECK(p.initial.coeffs[0] == 2.0);
    std::remove(path);
    CHECK_THROWS_AS(load_problem("does_not_exist.json"), std::invalid_argument);
}

TEST_CASE("grid refinement keeps simple forcings exact") {
    auto p = parse_problem(R"({"alpha":0.75,"T":1.0,"n_time":8,"L":1.0,
                               "M":1,"g_coeffs":[1.0],"forcing":{"constant":2.0}})");
    auto fine = with_cells(p, 32);
    CHECK(fine.grid.cells == 32);
    for (double v : fine.forcing.modes[0]) CHECK(v == 2.0);

    // a linear-in-t sampled forcing is reproduced exactly by linear resampling
    auto q = parse_problem(R"({"alpha":0.75,"T":1.0,"n_time":4,"L":1.0,
                               "M":1,"g_coeffs":[1.0],
                               "forcing":{"samples":[[0,0.25,0.5,0.75,1.0]]}})");
    auto qf = with_cells(q, 16);
    for (int i = 0; i <= 16; ++i)
        CHECK(qf.forcing.modes[0][(std::size_t)i] == doctest::Approx(i / 16.0).epsilon(1e-15));
}
