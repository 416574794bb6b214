#include <catch2/catch_amalgamated.hpp>

#include <hullforge/point_sets.hpp>

using namespace hullforge;

TEST_CASE("additive set over GF(9), frozen") {
    FieldPtr f = Field::make(3, 2);
    AdditivePointSet s = build_additive_set(f, 3, 1, 2);
    REQUIRE(s.subspace == std::vector<Elem>{0, 1, 2});
    REQUIRE(s.eta == 3);
    REQUIRE(s.betas == std::vector<Elem>{0, 1});
    REQUIRE(s.points == std::vector<Elem>{0, 1, 2, 3, 4, 5});
    REQUIRE(s.epsilon == 7);
    std::vector<Elem> u = closed_form_u(s);
    REQUIRE(u == std::vector<Elem>{7, 7, 7, 5, 5, 5});
    REQUIRE(u == compute_u(*f, s.points));
}

TEST_CASE("additive closed-form Lagrange coefficients match the definition") {
    struct Case {
        std::uint32_t p, m, r, z, t;
    };
    for (Case c : std::vector<Case>{{3, 2, 3, 1, 1},
                                    {3, 2, 3, 1, 3},
                                    {2, 2, 2, 1, 2},
                                    {2, 4, 4, 1, 4},
                                    {2, 4, 2, 2, 2},
                                    {2, 4, 2, 3, 1},
                                    {3, 3, 3, 2, 2},
                                    {5, 2, 5, 1, 5},
                                    {3, 4, 9, 1, 8},
                                    {3, 4, 3, 2, 3}}) {
        CAPTURE(c.p, c.m, c.r, c.z, c.t);
        FieldPtr fp = Field::make(c.p, c.m);
        AdditivePointSet s = build_additive_set(fp, c.r, c.z, c.t);
        std::size_t hsize = 1;
        for (std::uint32_t i = 0; i < c.z; ++i) hsize *= c.r;
        REQUIRE(s.n() == hsize * c.t);
        std::vector<Elem> closed = closed_form_u(s);
        REQUIRE(closed == compute_u(*fp, s.points));
        // epsilon * u lands in F_r^*, and u is constant on each coset
        PrimePower rp = factor_prime_power(c.r);
        for (std::size_t i = 0; i < closed.size(); ++i) {
            Elem scaled = fp->mul(s.epsilon, closed[i]);
            REQUIRE(scaled != 0);
            REQUIRE(fp->in_subfield(scaled, rp.m));
            REQUIRE(closed[i] == closed[i - i % hsize]);
        }
    }
}

TEST_CASE("additive set preconditions") {
    FieldPtr f = Field::make(3, 2);
    REQUIRE_THROWS_AS(build_additive_set(f, 2, 1, 1), PreconditionError);   // r not 3^e
    REQUIRE_THROWS_AS(build_additive_set(f, 9, 1, 1), PreconditionError);   // dim-1 = 0
    REQUIRE_THROWS_AS(build_additive_set(f, 3, 2, 1), PreconditionError);   // z too big
    REQUIRE_THROWS_AS(build_additive_set(f, 3, 1, 4), PreconditionError);   // t > r
    REQUIRE_THROWS_AS(build_additive_set(f, 3, 1, 0), PreconditionError);
    FieldPtr g = Field::make(2, 4);
    REQUIRE_THROWS_AS(build_additive_set(g, 8, 1, 1), PreconditionError);   // 3 does not divide 4
}

TEST_CASE("multiplicative set over GF(9), frozen") {
    FieldPtr fp = Field::make(3, 2);
    const Field& f = *fp;
    MultiplicativePointSet s = build_multiplicative_set(fp, 4, 2, false);
    REQUIRE(s.leaders.size() == 2);
    REQUIRE(s.leaders[0] == 1);
    REQUIRE(s.leaders[1] == f.omega());
    REQUIRE(s.points.size() == 8);
    // two cosets of the order-4 subgroup cover all units of GF(9)
    std::set<Elem> pts(s.points.begin(), s.points.end());
    REQUIRE(pts.size() == 8);
    REQUIRE(pts.count(0) == 0);
    // the n'-th power is constant on each coset
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(f.pow(s.points[i], 4) == f.pow(s.points[0], 4));
        REQUIRE(f.pow(s.points[4 + i], 4) == f.pow(s.points[4], 4));
    }
    REQUIRE(closed_form_u(s) == compute_u(f, s.points));
}

TEST_CASE("multiplicative closed-form Lagrange coefficients match, with and without zero") {
    struct Case {
        std::uint32_t p, m;
        std::uint64_t nprime;
        std::uint32_t t;
        bool with_zero;
    };
    for (Case c : std::vector<Case>{{3, 2, 4, 2, false},
                                    {3, 2, 4, 2, true},    // even t: sign regression case
                                    {3, 2, 4, 1, true},    // odd t
                                    {3, 2, 8, 1, false},
                                    {3, 2, 8, 1, true},
                                    {2, 4, 5, 3, true},
                                    {2, 4, 5, 2, false},
                                    {2, 4, 15, 1, true},
                                    {5, 2, 6, 3, true},
                                    {5, 2, 6, 4, false},
                                    {5, 2, 12, 2, true},
                                    {7, 2, 16, 2, true},
                                    {7, 2, 8, 3, false}}) {
        CAPTURE(c.p, c.m, c.nprime, c.t, c.with_zero);
        FieldPtr fp = Field::make(c.p, c.m);
        MultiplicativePointSet s = build_multiplicative_set(fp, c.nprime, c.t, c.with_zero);
        REQUIRE(s.n() == c.nprime * c.t + (c.with_zero ? 1 : 0));
        if (c.with_zero) REQUIRE(s.points.back() == 0);
        REQUIRE(closed_form_u(s) == compute_u(*fp, s.points));
    }
}

TEST_CASE("multiplicative coset leaders represent distinct cosets") {
    FieldPtr fp = Field::make(5, 2);
    const Field& f = *fp;
    MultiplicativePointSet s = build_multiplicative_set(fp, 6, 4, false);
    for (std::size_t i = 0; i < s.leaders.size(); ++i)
        for (std::size_t j = i + 1; j < s.leaders.size(); ++j) {
            Elem ratio = f.div(s.leaders[i], s.leaders[j]);
            // in the subgroup iff dlog divisible by (q^2-1)/n'
            REQUIRE(f.dlog(ratio) % ((f.q() - 1) / 6) != 0);
        }
}

TEST_CASE("multiplicative set preconditions") {
    FieldPtr f = Field::make(3, 2);
    REQUIRE_THROWS_AS(build_multiplicative_set(f, 3, 1, false), PreconditionError);  // 3 no div 8
    REQUIRE_THROWS_AS(build_multiplicative_set(f, 4, 3, false), PreconditionError);  // t > 2
    REQUIRE_THROWS_AS(build_multiplicative_set(f, 1, 1, false), PreconditionError);  // one point
    REQUIRE_THROWS_AS(build_multiplicative_set(f, 8, 2, false), PreconditionError);  // t > 1
}

TEST_CASE("nonvanishing monic polynomials, frozen") {
    FieldPtr f2 = Field::make(2, 1);
    REQUIRE(nonvanishing_monic(*f2, {0, 1}, 2) == Poly{1, 1, 1});  // x^2 + x + 1
    FieldPtr f5 = Field::make(5, 1);
    REQUIRE(nonvanishing_monic(*f5, {0, 1, 2, 3}, 1) == Poly{1, 1});  // x - 4
    REQUIRE(nonvanishing_monic(*f5, {0, 1, 2, 3}, 0) == Poly{1});
    REQUIRE_THROWS_AS(nonvanishing_monic(*f5, {0, 1, 2, 3, 4}, 1), PreconditionError);
    // results really do avoid the set
    FieldPtr f9 = Field::make(3, 2);
    std::vector<Elem> avoid{0, 1, 2, 3, 4, 5};
    for (std::uint32_t deg : {1u, 2u, 3u}) {
        Poly p = nonvanishing_monic(*f9, avoid, deg);
        REQUIRE(poly_degree(p) == static_cast<int>(deg));
        REQUIRE(p.back() == 1);
        for (Elem a : avoid) REQUIRE(poly_eval(*f9, p, a) != 0);
    }
}
