#include <doctest.h>

#include "rhb/reports.hpp"

using namespace rhb;

TEST_CASE("lens and poly JSON round-trips with decimal strings") {
    LensSpace lens{Int("57639267299087068063915184856155334916"), Int(7)};
    json j = lens_to_json(lens);
    CHECK(j["p"].is_string());
    CHECK(lens_from_json(j) == lens);

    IntPoly p({2, 2, 1});
    json pj = poly_to_json(p);
    CHECK(pj["coeffs"][0] == "2");
    CHECK(poly_from_json(pj) == p);
    CHECK(poly_from_json(poly_to_json(IntPoly{})) == IntPoly{});
}

TEST_CASE("trace JSON round-trip preserves every field") {
    ReductionTrace trace = reduce_to_cp2(1, 3);
    json j = trace_to_json(trace);
    ReductionTrace back = trace_from_json(j);
    CHECK(back.k == trace.k);
    CHECK(back.m == trace.m);
    CHECK(back.start == trace.start);
    CHECK(back.end == trace.end);
    CHECK(back.moves == trace.moves);
    CHECK(trace_to_json(back) == j);

    // coordinates travel as decimal strings
    CHECK(j["start"][0][0].is_string());
    CHECK(j["moves"][0]["pos"].is_number());
}

TEST_CASE("verify_trace catches tampering") {
    ReductionTrace trace = reduce_to_cp2(0, 3);
    CHECK(verify_trace(trace).ok());

    ReductionTrace bad_end = trace;
    bad_end.end = tau(0, 3);
    TraceVerification v = verify_trace(bad_end);
    CHECK_FALSE(v.replay_matches);
    CHECK_FALSE(v.ok());

    ReductionTrace bad_start = trace;
    bad_start.start = tau(2, 3);
    v = verify_trace(bad_start);
    CHECK_FALSE(v.start_matches_tau);
    CHECK_FALSE(v.ok());

    ReductionTrace dropped_move = trace;
    dropped_move.moves.pop_back();
    CHECK_FALSE(verify_trace(dropped_move).replay_matches);
}

TEST_CASE("verify_cell outcomes") {
    CellResult ok_cell = verify_cell(0, 3, true);
    CHECK(ok_cell.ok);
    CHECK(ok_cell.verdict.p == 17);
    CHECK(ok_cell.trace_moves == 1 + 2 + 3);
    REQUIRE(ok_cell.trace.has_value());
    CHECK(replay(*ok_cell.trace) == cp2_normal_form());

    CellResult degenerate = verify_cell(-1, 5, true);
    CHECK(degenerate.ok);
    CHECK(degenerate.string_s == "2,2,2");
    CHECK(degenerate.verdict.symplectic == SymplecticStatus::yes);
    CHECK(degenerate.trace_moves == 0);
    CHECK_FALSE(degenerate.trace.has_value());

    CHECK_THROWS_AS(verify_cell(0, 2, false), std::invalid_argument);
}

TEST_CASE("grid sweep is deterministic and parallel-safe") {
    GridSpec grid(0, 2, 1, 3);
    auto cells = grid.cells();
    REQUIRE(cells.size() == 6);
    CHECK(cells.front() == std::pair<long long, long long>{0, 1});
    CHECK(cells.back() == std::pair<long long, long long>{2, 3});

    auto serial = run_grid(grid, 1);
    auto parallel = run_grid(grid, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].k == parallel[i].k);
        CHECK(serial[i].m == parallel[i].m);
        CHECK(cell_to_json(serial[i], false) == cell_to_json(parallel[i], false));
    }
    CHECK(serial[0].verdict.p == 5);  // row (0,1)
    CHECK(serial[0].verdict.q == 2);
    CHECK(serial[2].verdict.p == 13);  // row (1,1): the Fibonacci pair
    CHECK(serial[2].verdict.q == 5);

    CHECK_THROWS_AS(GridSpec(0, 2, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(-2, 2, 1, 3), std::invalid_argument);
}

TEST_CASE("csv table has fixed columns") {
    auto cells = run_grid(GridSpec(0, 0, 1, 1), 1);
    std::string csv = table_to_csv(cells);
    CHECK(csv.starts_with(
        "k,m,p,q,lens_p,lens_q,smooth,symplectic,markov,divides_q2_plus_9,trace_moves,status\n"));
    CHECK(csv.find("0,1,5,2,25,9,yes,obstructed,yes,false,4,ok") != std::string::npos);
    CHECK(table_to_csv({}).find('\n') == table_to_csv({}).size() - 1);  // header only
}

TEST_CASE("report JSON keys are sorted and stable") {
    json a = report_identities("identities --l-max 12", 12);
    json b = report_identities("identities --l-max 12", 12);
    CHECK(a.dump(2) == b.dump(2));
    CHECK(a["status"] == "ok");
    CHECK(a["identities"].size() == 7);

    json m = report_markov("markov --depth 3", 3);
    CHECK(m["count"].get<std::size_t>() >= 5);
    CHECK(m["triples"][0] == json::array({"1", "1", "1"}));
}
