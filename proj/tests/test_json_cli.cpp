#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "dualvol/json_io.hpp"
#include "test_util.hpp"

using namespace dualvol;
using namespace dualvol::testutil;

TEST_CASE("rational function JSON round trip is rf_equal") {
    auto q = Polytope(2, {rv({1, 1}), rv({2, 1}), rv({3, -1}), rv({1, -1})});
    auto dv = dual_volume_function(q);
    json j = rational_function_to_json(dv.function, true);
    auto back = rational_function_from_json(j);
    CHECK(rf_equal(dv.function, back));
    CHECK(j.contains("normal"));

    // a function with numerator factors round-trips too
    MinkowskiSequence pair(2, {Polytope(2, {rv({0, 0}), rv({1, 0})}),
                               Polytope(2, {rv({0, 0}), rv({1, 2})})});
    auto m = dual_mixed_volume_z(pair);
    CHECK(rf_equal(m, rational_function_from_json(rational_function_to_json(m))));
}

TEST_CASE("polytope, fan, sequence, subdivision round trips") {
    auto q = Polytope(2, {rv({1, 1}), rv({2, 1}), rv({3, -1}), rv({1, -1})});
    CHECK(polytope_from_json(polytope_to_json(q)) == q);

    Fan fan;
    fan.dim = 2;
    fan.pure_dim = 2;
    fan.rays = {rv({-2, 1}), rv({1, 1}), rv({3, 1})};
    fan.cones = {{0, 1}, {1, 2}};
    Fan back = fan_from_json(fan_to_json(fan));
    CHECK(back.rays == fan.rays);
    CHECK(back.cones == fan.cones);

    MinkowskiSequence seq(2, {q, segment(rv({0, 0}), rv({1, 2}))});
    auto seq2 = sequence_from_json(sequence_to_json(seq));
    CHECK(seq2.dim == seq.dim);
    CHECK(seq2.parts == seq.parts);

    MixedSubdivision sub;
    sub.cells.push_back({{{0, 1}, {0, 1}}});
    sub.cells.push_back({{{1, 2}, {0}}});
    auto sub2 = subdivision_from_json(subdivision_to_json(sub));
    REQUIRE(sub2.cells.size() == 2);
    CHECK(sub2.cells[0].parts == sub.cells[0].parts);

    // rationals parse in both spellings
    CHECK(rational_from_json(json("\"-6/4\""_json)) == Rational(-3, 2));
    CHECK(rational_from_json(json(7)) == 7);
}

TEST_CASE("CLI golden runs") {
    const char* bin = std::getenv("DUALVOL_BIN");
    if (!bin) return;  // only run when ctest provides the binary path
    auto run = [&](const std::string& args, int expect_code) {
        std::string cmd = std::string(bin) + " " + args + " > /tmp/dualvol_cli_out.json 2>&1";
        int rc = std::system(cmd.c_str());
        CHECK(WEXITSTATUS(rc) == expect_code);
        std::ifstream in("/tmp/dualvol_cli_out.json");
        json j;
        in >> j;
        return j;
    };
    {
        std::ofstream out("/tmp/dualvol_quad.json");
        out << polytope_to_json(Polytope(2, {rv({1, 1}), rv({2, 1}), rv({3, -1}), rv({1, -1})}));
    }
    auto j = run("dualvol --polytope /tmp/dualvol_quad.json", 0);
    CHECK(j.at("value") == "-6/5");
    CHECK(j.at("seed") == 0);

    {
        std::ofstream out("/tmp/dualvol_seg2d.json");
        out << polytope_to_json(Polytope(2, {rv({0, 0}), rv({1, 1})}));
    }
    CHECK(run("dualvol --polytope /tmp/dualvol_seg2d.json", 0).at("value") == "0");

    {
        std::ofstream out("/tmp/dualvol_codeg.json");
        out << polytope_to_json(Polytope(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})}));
    }
    CHECK(run("dualvol --polytope /tmp/dualvol_codeg.json", 3).contains("ray"));

    {
        std::ofstream out("/tmp/dualvol_fan.json");
        Fan fan;
        fan.dim = 2;
        fan.pure_dim = 2;
        fan.rays = {rv({-2, 1}), rv({1, 1}), rv({3, 1})};
        fan.cones = {{0, 1}, {1, 2}};
        out << json{{"fan", fan_to_json(fan)}, {"values", {"4", "1", "3"}}};
    }
    CHECK(run("dualvol --fan /tmp/dualvol_fan.json", 0).at("value") == "17/12");

    {
        std::ofstream s("/tmp/dualvol_seq.json");
        s << sequence_to_json(MinkowskiSequence(
            2, {Polytope(2, {rv({1, 0}), rv({0, 2}), rv({-1, -1})}),
                Polytope(2, {rv({0, 0}), rv({2, 0}), rv({0, 2})})}));
        std::ofstream t("/tmp/dualvol_sub.json");
        MixedSubdivision five;
        five.cells.push_back({{{0, 1}, {0, 1}}});
        five.cells.push_back({{{1}, {0, 1, 2}}});
        five.cells.push_back({{{0, 1, 2}, {0}}});
        five.cells.push_back({{{1, 2}, {0, 2}}});
        five.cells.push_back({{{0, 2}, {0, 2}}});
        t << subdivision_to_json(five);
    }
    auto v = run("verify-subdivision --seq /tmp/dualvol_seq.json --sub /tmp/dualvol_sub.json", 0);
    CHECK(v.at("valid") == true);
    CHECK(v.at("additive") == true);

    // determinism: identical invocations give identical bytes
    run("genperm --n 3", 0);
    std::ifstream a("/tmp/dualvol_cli_out.json");
    std::string first((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    run("genperm --n 3", 0);
    std::ifstream b("/tmp/dualvol_cli_out.json");
    std::string second((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(first == second);

    // emitted function JSON re-parses to an rf_equal object
    auto g = run("genperm --n 3", 0);
    CHECK(rf_equal(rational_function_from_json(g.at("function")), genperm_dmv_closed_form(3)));
}
