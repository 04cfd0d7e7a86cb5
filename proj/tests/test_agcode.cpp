#include <random>

#include "doctest.h"
#include "rrcode/agcode.hpp"
#include "rrcode/errors.hpp"
#include "testutil.hpp"

using namespace rrcode;
using rrtest::P;
using rrtest::pt;

namespace {

std::vector<Point> gf31_gpoints(const Field& k) {
    return {pt(k, 3, 25), pt(k, 4, 19), pt(k, 5, 11), pt(k, 6, 1)};
}

std::vector<Point> gf5_gpoints(const Field& k) {
    return {pt(k, 2, 1), pt(k, 2, 4), pt(k, 3, 1), pt(k, 3, 4), pt(k, 4, 1), pt(k, 4, 4)};
}

}  // namespace

TEST_CASE("generator matrix of the (4,2) code") {
    Curve c = rrtest::gf31_curve();
    const Field& k = c.field();
    LinearCode code =
        generator_matrix(c, rrtest::gf31_divisor(k), gf31_gpoints(k), rrtest::gf31_kappa(k));
    CHECK(code.gen() == Matrix::from_ints(k, {{1, 1, 1, 1}, {30, 20, 15, 12}}));
    CHECK(code.k() == 2);
    CHECK(code.m() == 4);
    CHECK(code.deg_d() == 4);

    ParityCheck pc = parity_check(code);
    CHECK(pc.h == Matrix::from_ints(k, {{16, 14, 1, 0}, {7, 23, 0, 1}}));
    CHECK(!pc.permuted);

    DistanceReport dist = min_distance(code);
    CHECK(dist.d == 3);
    CHECK(dist.mds);
}

TEST_CASE("generator matrix of the (6,3,4) code over GF(5)") {
    Curve c = rrtest::gf5_curve();
    const Field& k = c.field();
    LinearCode code = generator_matrix(c, rrtest::gf5_divisor(k), gf5_gpoints(k));
    CHECK(code.gen() == Matrix::from_ints(k, {{1, 1, 1, 1, 1, 1},
                                              {2, 2, 3, 3, 4, 4},
                                              {4, 3, 1, 4, 2, 1}}));
    DistanceReport dist = min_distance(code);
    CHECK(dist.d == 4);
    CHECK(dist.mds);
}

TEST_CASE("evaluation set validation") {
    Curve c = rrtest::gf5_curve();
    const Field& k = c.field();
    Divisor d = rrtest::gf5_divisor(k);
    CHECK_THROWS_AS(generator_matrix(c, d, {}), Error);
    CHECK_THROWS_AS(generator_matrix(c, d, {pt(k, 2, 1), pt(k, 2, 1)}), Error);  // duplicate
    CHECK_THROWS_AS(generator_matrix(c, d, {pt(k, 0, 1)}), Error);               // in supp(D)
    CHECK_THROWS_AS(generator_matrix(c, d, {pt(k, 2, 2)}), Error);               // off curve
    CHECK_THROWS_AS(generator_matrix(c, d, {Point::infinity()}), Error);
}

TEST_CASE("rank deficiency is reported") {
    Field k = Field::make(5, 1);
    CHECK_THROWS_AS(LinearCode::make(Matrix::from_ints(k, {{1, 2}, {2, 4}})), Error);

    // x and x^2 agree on every GF(2)-rational point, collapsing the rank
    Field k2 = Field::make(2, 1);
    Curve c2 = Curve::make(k2, P(k2, {0, 0, 0, 0, 1, 1}), P(k2, {1}));  // y^2+y = x^5+x^4
    Divisor d;
    d.add(Point::infinity(), 4);  // basis {1, x, x^2}
    std::vector<Point> g;
    for (const auto& p : c2.rational_points())
        if (!p.is_infinity()) g.push_back(p);
    REQUIRE(g.size() >= 3);
    CHECK_THROWS_AS(generator_matrix(c2, d, g), Error);
}

TEST_CASE("parity check conventions") {
    Field k = Field::make(5, 1);
    SUBCASE("already systematic [I | 0]") {
        Matrix gen = Matrix::from_ints(k, {{1, 0, 0, 0}, {0, 1, 0, 0}});
        ParityCheck pc = parity_check(LinearCode::make(gen));
        CHECK(pc.h == Matrix::from_ints(k, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
    }
    SUBCASE("single row [1, 1]") {
        ParityCheck pc = parity_check(LinearCode::make(Matrix::from_ints(k, {{1, 1}})));
        CHECK(pc.h == Matrix::from_ints(k, {{4, 1}}));
        // verify gen * H^T = 1*4 + 1*1 = 5 = 0
        CHECK(k.add(k.mul(k.one(), k.from_int(4)), k.one()) == k.zero());
    }
    SUBCASE("pivot permutation fallback") {
        Matrix gen = Matrix::from_ints(k, {{0, 1, 2}});
        ParityCheck pc = parity_check(LinearCode::make(gen));
        CHECK(pc.permuted);
        CHECK((gen * pc.h.transposed()).is_zero());
        Matrix hc = pc.h;
        CHECK(rref(hc).rank == 2);
    }
}

namespace {

// Independent distance oracle: plain enumeration of every nonzero message.
int brute_distance(const LinearCode& code) {
    const Field& fld = code.field();
    auto elems = fld.enumerate();
    uint64_t total = 1;
    for (size_t i = 0; i < code.k(); ++i) total *= fld.q();
    int best = static_cast<int>(code.m()) + 1;
    for (uint64_t msg = 1; msg < total; ++msg) {
        uint64_t v = msg;
        int weight = 0;
        std::vector<FieldElement> word(code.m(), fld.zero());
        for (size_t r = 0; r < code.k(); ++r) {
            const FieldElement& u = elems[v % fld.q()];
            v /= fld.q();
            if (u.is_zero()) continue;
            for (size_t c = 0; c < code.m(); ++c)
                word[c] = fld.add(word[c], fld.mul(u, code.gen().at(r, c)));
        }
        for (const auto& e : word)
            if (!e.is_zero()) ++weight;
        best = std::min(best, weight);
    }
    return best;
}

}  // namespace

TEST_CASE("distance search") {
    Field k = Field::make(5, 1);
    SUBCASE("repetition code") {
        LinearCode rep = LinearCode::make(Matrix::from_ints(k, {{1, 1, 1}}));
        DistanceReport dist = min_distance(rep);
        CHECK(dist.d == 3);
        CHECK(dist.mds);
    }
    SUBCASE("agrees with plain enumeration") {
        std::mt19937_64 rng(43);
        for (int rep = 0; rep < 10; ++rep) {
            size_t kk = rng() % 2 + 1, m = rng() % 4 + kk;
            Matrix gen(k, kk, m);
            for (size_t r = 0; r < kk; ++r)
                for (size_t c = 0; c < m; ++c)
                    gen.at(r, c) = k.from_int(static_cast<int64_t>(rng() % 5));
            Matrix probe = gen;
            if (rref(probe).rank != kk) continue;
            LinearCode code = LinearCode::make(gen);
            CHECK(min_distance(code).d == brute_distance(code));
        }
        Curve c5 = rrtest::gf5_curve();
        LinearCode worked = generator_matrix(c5, rrtest::gf5_divisor(k), gf5_gpoints(k));
        CHECK(min_distance(worked).d == brute_distance(worked));
    }
    SUBCASE("budget guard") {
        LinearCode rep = LinearCode::make(Matrix::from_ints(k, {{1, 0}, {0, 1}}));
        CHECK_THROWS_AS(min_distance(rep, 10), Error);
    }
    SUBCASE("invariant under row operations") {
        std::mt19937_64 rng(37);
        Curve c = rrtest::gf5_curve();
        LinearCode code = generator_matrix(c, rrtest::gf5_divisor(k), gf5_gpoints(k));
        int d0 = min_distance(code).d;
        for (int rep = 0; rep < 5; ++rep) {
            Matrix left(k, code.k(), code.k());
            do {
                for (size_t r = 0; r < code.k(); ++r)
                    for (size_t cc = 0; cc < code.k(); ++cc)
                        left.at(r, cc) = k.from_int(static_cast<int64_t>(rng() % 5));
                Matrix probe = left;
                if (rref(probe).rank == code.k()) break;
            } while (true);
            LinearCode mixed = LinearCode::make(left * code.gen());
            CHECK(min_distance(mixed).d == d0);
        }
    }
}

TEST_CASE("code-theory invariants on all worked codes") {
    struct Setup {
        Curve curve;
        Divisor d;
        std::vector<Point> g;
        std::optional<Poly> kappa;
    };
    std::vector<Setup> setups;

    {
        Curve c = rrtest::gf31_curve();
        const Field& k = c.field();
        setups.push_back({c, rrtest::gf31_divisor(k), gf31_gpoints(k), rrtest::gf31_kappa(k)});
    }
    {
        Curve c = rrtest::gf5_curve();
        setups.push_back({c, rrtest::gf5_divisor(c.field()), gf5_gpoints(c.field()), {}});
    }
    {
        Curve c = rrtest::gf13_curve();
        const Field& k = c.field();
        Divisor d;
        d.add(pt(k, 0, 0), 1);
        d.add(Point::infinity(), 3);
        setups.push_back({c, d,
                          {pt(k, 1, 1), pt(k, 1, 12), pt(k, 3, 1), pt(k, 3, 12), pt(k, 6, 6),
                           pt(k, 6, 7), pt(k, 7, 4), pt(k, 7, 9), pt(k, 9, 6), pt(k, 9, 7)},
                          {}});
    }

    for (const auto& s : setups) {
        LinearCode code = generator_matrix(s.curve, s.d, s.g, s.kappa);
        ParityCheck pc = parity_check(code);
        CHECK((code.gen() * pc.h.transposed()).is_zero());
        Matrix hc = pc.h;
        CHECK(rref(hc).rank == code.m() - code.k());
        DistanceReport dist = min_distance(code);
        CHECK(dist.d >= static_cast<int>(code.m()) - *code.deg_d());
        CHECK(dist.d <= static_cast<int>(code.m() - code.k()) + 1);
    }
}
