#include <doctest.h>

#include <random>

#include "rhb/polyseq.hpp"
#include "rhb/slide.hpp"

using namespace rhb;

namespace {

FramedCurve fc(long long p, long long q, int d) { return FramedCurve(Int(p), Int(q), d); }

}  // namespace

TEST_CASE("FramedCurve invariants") {
    CHECK_THROWS_AS(FramedCurve(0, 0, 1), std::domain_error);
    CHECK_THROWS_AS(FramedCurve(1, 0, 2), std::invalid_argument);
    CHECK(fc(2, 1, -1).str() == "(2,1)_-1");
}

TEST_CASE("slide_F single steps of the normal-form chain") {
    auto step_quantity = [](const FramedCurve& a, const FramedCurve& b) {
        return Int(b.delta) * (b.p * a.q - b.q * a.p);  // d0 D0
    };

    FramedCurve a0 = fc(0, 1, 1), b0 = fc(1, 0, -1);
    CHECK(step_quantity(a0, b0) == -1);
    auto [b1, c1] = slide_F(a0, b0);
    CHECK(b1 == fc(1, 0, -1));
    CHECK(c1 == fc(1, 1, 1));

    CHECK(step_quantity(b1, c1) == -1);  // d0 D0 stays unchanged along the chain
    auto [b2, c2] = slide_F(b1, c1);
    CHECK(b2 == fc(1, 1, 1));
    CHECK(c2 == fc(2, 1, -1));

    CHECK(step_quantity(b2, c2) == -1);
    auto [b3, c3] = slide_F(b2, c2);
    CHECK(b3 == fc(2, 1, -1));
    CHECK(c3 == fc(3, 2, 1));  // F^3((0,1)_1,(1,0)_-1) = ((2,1)_-1,(3,2)_1)
}

TEST_CASE("slide_F_inverse undoes slide_F") {
    auto [x, y] = slide_F_inverse(fc(2, 1, -1), fc(3, 2, 1));
    auto [x2, y2] = slide_F_inverse(x, y);
    auto [x3, y3] = slide_F_inverse(x2, y2);
    CHECK(x3 == fc(0, 1, 1));
    CHECK(y3 == fc(1, 0, -1));

    std::mt19937_64 rng(7);
    auto draw = [&]() -> long long {
        return static_cast<long long>(rng() % 2000001) - 1000000;
    };
    int done = 0;
    while (done < 1000) {
        long long p = draw(), q = draw(), p0 = draw(), q0 = draw();
        if ((p == 0 && q == 0) || (p0 == 0 && q0 == 0)) continue;
        FramedCurve a = fc(p, q, rng() % 2 ? 1 : -1);
        FramedCurve b = fc(p0, q0, rng() % 2 ? 1 : -1);
        try {
            auto [fb, fc_] = slide_F(a, b);
            auto [ra, rb] = slide_F_inverse(fb, fc_);
            CHECK(ra == a);
            CHECK(rb == b);
            ++done;
        } catch (const std::domain_error&) {
            // degenerate slide: skip the draw
        }
    }
}

TEST_CASE("flip_sign") {
    CurveTriple t{{fc(2, 1, -1), fc(5, 4, 1), fc(3, 2, 1)}};
    CurveTriple f2 = flip_sign(t, 2);
    CHECK(f2.nu[1] == fc(-5, -4, 1));
    CHECK(f2.nu[0] == t.nu[0]);
    CHECK(flip_sign(f2, 2) == t);
    CHECK_THROWS_AS(flip_sign(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(flip_sign(t, 4), std::invalid_argument);
}

TEST_CASE("tau known triples") {
    for (long long m = 1; m <= 11; m += 2) {
        CurveTriple t = tau(-1, m);
        CHECK(t.nu[0] == fc(2, 1, -1));
        CHECK(t.nu[1] == fc(m + 2, m + 1, 1));
        CHECK(t.nu[2] == fc(m, m - 1, 1));
    }
    // components from the table rows at x=1: P_1=3, Q_1=2, P_2=5, Q_2=3
    CurveTriple t01 = tau(0, 1);
    CHECK(t01.nu[0] == fc(3, 2, 1));
    CHECK(t01.nu[1] == fc(5, 3, -1));
    CHECK(t01.nu[2] == fc(1, 0, 1));
    CHECK_THROWS_AS(tau(-2, 1), std::invalid_argument);
    CHECK_THROWS_AS(tau(0, 0), std::invalid_argument);
}

TEST_CASE("sliding the first pair of tau(l,m) gives tau(l+1,m)") {
    for (long long l = -1; l <= 12; ++l) {
        for (long long m = 1; m <= 11; ++m) {  // holds for even m as well
            CAPTURE(l);
            CAPTURE(m);
            CurveTriple t = tau(l, m);
            // the step quantity d0 D0 is -m at every level
            Int delta0 = t.nu[1].p * t.nu[0].q - t.nu[1].q * t.nu[0].p;
            CHECK(t.nu[1].delta * delta0 == Int(-m));
            auto [b, c] = slide_F(t.nu[0], t.nu[1]);
            CurveTriple expect = tau(l + 1, m);
            CHECK(b == expect.nu[0]);
            CHECK(c == expect.nu[1]);
        }
    }
}

TEST_CASE("km-ind(2) pair shrink: F then flip, with step quantity 2") {
    for (long long a = 2; a <= 200; ++a) {
        FramedCurve x = fc(a + 2, a + 1, 1);
        FramedCurve y = fc(a, a - 1, 1);
        // oracle: D0 = a(a+1) - (a-1)(a+2) = 2
        Int delta0 = y.p * x.q - y.q * x.p;
        CHECK(delta0 == 2);
        auto [b, c] = slide_F(x, y);
        CHECK(b == y);
        FramedCurve flipped = FramedCurve(-c.p, -c.q, c.delta);
        CHECK(flipped == fc(a - 2, a - 3, 1));
    }
}

TEST_CASE("starting_triple matches tau(2k,m) and the stated pattern") {
    CurveTriple t = starting_triple(0, 1);
    CHECK(t.nu[0] == fc(3, 2, 1));
    CHECK(t.nu[1] == fc(5, 3, -1));
    CHECK(t.nu[2] == fc(1, 0, 1));

    for (long long k = 0; k <= 6; ++k) {
        for (long long m = 1; m <= 11; m += 2) {
            CurveTriple s = starting_triple(k, m);
            CHECK(s.nu[0].delta == 1);
            CHECK(s.nu[1].delta == -1);
            CHECK(s.nu[2].delta == 1);
            CHECK(s.nu[2] == fc(m, m - 1, 1));
            // first columns evaluate the P,Q sequences
            CHECK(s.nu[0].p == seq_P(2 * k + 1)(Int(m)));
            CHECK(s.nu[0].q == seq_Q(2 * k + 1)(Int(m)));
            CHECK(s.nu[1].p == seq_P(2 * k + 2)(Int(m)));
            CHECK(s.nu[1].q == seq_Q(2 * k + 2)(Int(m)));
        }
    }
    CHECK_THROWS_AS(starting_triple(-1, 1), std::invalid_argument);
    CHECK_NOTHROW(starting_triple(1, 2));  // matrix/tau coherence holds for even m too
}

TEST_CASE("is_cp2_normal_form") {
    CHECK(is_cp2_normal_form(cp2_normal_form()));
    CurveTriple flipped{{fc(0, -1, 1), fc(1, 0, -1), fc(1, 0, 1)}};
    CHECK(is_cp2_normal_form(flipped));
    CHECK_FALSE(is_cp2_normal_form(tau(-1, 3)));
    CurveTriple wrong_delta{{fc(0, 1, -1), fc(1, 0, -1), fc(1, 0, 1)}};
    CHECK_FALSE(is_cp2_normal_form(wrong_delta));
}

TEST_CASE("reduce_to_cp2 certificates") {
    SUBCASE("k=0, m=1: one descent, no middle rounds, three inversions") {
        ReductionTrace trace = reduce_to_cp2(0, 1);
        CHECK(trace.moves.size() == 4);
        CHECK(trace.start == tau(0, 1));
        CHECK(trace.end == cp2_normal_form());
        CHECK(replay(trace) == trace.end);
    }

    SUBCASE("k=0, m=3: intermediate after descent is tau(-1,3)") {
        ReductionTrace trace = reduce_to_cp2(0, 3);
        ReductionTrace prefix = trace;
        prefix.moves.resize(1);  // 2k+1 = 1 descent move
        CHECK(replay(prefix) == tau(-1, 3));
        CHECK(tau(-1, 3) == CurveTriple{{fc(2, 1, -1), fc(5, 4, 1), fc(3, 2, 1)}});
    }

    SUBCASE("k=2, m=5 reaches the normal form with the exact move count") {
        ReductionTrace trace = reduce_to_cp2(2, 5);
        CHECK(trace.end == cp2_normal_form());
        CHECK(trace.moves.size() == static_cast<std::size_t>(5 + 4 + 3));
        CHECK(replay(trace) == trace.end);
    }

    SUBCASE("move kinds follow the three phases") {
        ReductionTrace trace = reduce_to_cp2(1, 5);
        REQUIRE(trace.moves.size() == 3 + 4 + 3);
        for (int i = 0; i < 3; ++i) CHECK(trace.moves[i] == Move{MoveKind::slide_backward, 1});
        CHECK(trace.moves[3] == Move{MoveKind::slide_forward, 2});
        CHECK(trace.moves[4] == Move{MoveKind::sign_flip, 3});
        CHECK(trace.moves[5] == Move{MoveKind::slide_forward, 2});
        CHECK(trace.moves[6] == Move{MoveKind::sign_flip, 3});
        for (int i = 7; i < 10; ++i) CHECK(trace.moves[i] == Move{MoveKind::slide_backward, 1});
    }

    SUBCASE("rejects bad parameters") {
        CHECK_THROWS_AS(reduce_to_cp2(-1, 1), std::invalid_argument);
        CHECK_THROWS_AS(reduce_to_cp2(0, 2), std::invalid_argument);
        CHECK_THROWS_AS(reduce_to_cp2(0, 0), std::invalid_argument);
    }
}

TEST_CASE("replay") {
    ReductionTrace empty;
    empty.start = tau(1, 3);
    empty.end = empty.start;
    CHECK(replay(empty) == empty.start);

    // km-ind(3) forward from the normal-form pair
    ReductionTrace fwd;
    fwd.start = cp2_normal_form();
    fwd.moves = {Move{MoveKind::slide_forward, 1}, Move{MoveKind::slide_forward, 1},
                 Move{MoveKind::slide_forward, 1}};
    CurveTriple out = replay(fwd);
    CHECK(out.nu[0] == fc(2, 1, -1));
    CHECK(out.nu[1] == fc(3, 2, 1));
}
