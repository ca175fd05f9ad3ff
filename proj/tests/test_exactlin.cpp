#include <doctest.h>

#include "cyc/exactlin.hpp"

#include <random>

using namespace cyc;

namespace {

std::vector<std::vector<Scalar>> random_matrix(std::mt19937& rng, int rows, int cols, int density)
{
    std::uniform_int_distribution<int> val(-3, 3), pick(0, 99);
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols));
    for (auto& row : m)
        for (auto& x : row)
            if (pick(rng) < density)
                x = frac(val(rng), 1 + pick(rng) % 4);
    return m;
}

LinearMap as_map(const std::vector<std::vector<Scalar>>& m, int cols)
{
    GradedSpace s, t;
    for (int j = 0; j < cols; ++j)
        s.add("e" + std::to_string(j), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        t.add("f" + std::to_string(i), 0);
    LinearMap f(s, t, 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < cols; ++j)
            f.add_entry(static_cast<int>(i), j, m[i][j]);
    return f;
}

// boundary complex of a triangle (a circle): vertices in degree 0, edges in degree 1
ChainComplex circle()
{
    ChainComplex c;
    for (const char* v : {"v0", "v1", "v2"})
        c.space.add(v, 0);
    for (const char* e : {"e01", "e12", "e02"})
        c.space.add(e, 1);
    c.d = LinearMap(c.space, c.space, -1);
    auto edge = [&](int e, int a, int b) {
        c.d.add_entry(b, e, 1);
        c.d.add_entry(a, e, -1);
    };
    edge(3, 0, 1);
    edge(4, 1, 2);
    edge(5, 0, 2);
    return c;
}

}  // namespace

TEST_SUITE("exactlin")
{
    TEST_CASE("sparse and dense elimination agree on ranks")
    {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            int r = 1 + trial % 7, c = 1 + (trial * 5) % 8;
            auto m = random_matrix(rng, r, c, 20 + trial % 60);
            auto f = as_map(m, c);
            int sparse = rank(f);
            CHECK(sparse == dense_rank(m, c));
            auto ker = kernel(f);
            CHECK(static_cast<int>(ker.size()) == c - sparse);
            for (const auto& v : ker)
                CHECK(f.apply(v).is_zero());
            CHECK(static_cast<int>(image_basis(f).size()) == sparse);
        }
    }

    TEST_CASE("solve finds preimages exactly when they exist")
    {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 30; ++trial) {
            auto m = random_matrix(rng, 5, 4, 50);
            auto f = as_map(m, 4);
            Vec x;
            x.add(trial % 4, frac(trial + 1, 3));
            x.add((trial + 1) % 4, -2);
            Vec b = f.apply(x);
            auto sol = solve(f, b);
            REQUIRE(sol.has_value());
            CHECK(f.apply(*sol) == b);
        }
        GradedSpace s, t;
        s.add("a", 0);
        t.add("p", 0);
        t.add("q", 0);
        LinearMap f(s, t, 0);
        f.add_entry(0, 0, 1);
        Vec rhs;
        rhs.add(1, 1);
        CHECK_FALSE(solve(f, rhs).has_value());
    }

    TEST_CASE("echelon tracking reproduces inputs")
    {
        Echelon e(true);
        Vec a, b, c;
        a.add(0, 1);
        a.add(2, 3);
        b.add(0, 2);
        b.add(1, 1);
        c = a * Scalar(2) - b;
        CHECK_FALSE(e.insert(a, 10).has_value());
        CHECK_FALSE(e.insert(b, 11).has_value());
        auto rel = e.insert(c, 12);
        REQUIRE(rel.has_value());
        CHECK(rel->coeff(12) == 1);
        CHECK(rel->coeff(10) == -2);
        CHECK(rel->coeff(11) == 1);
    }

    TEST_CASE("homology of a circle")
    {
        ChainComplex c = circle();
        auto h = homology(c, 0, 1);
        CHECK(h.at(0).dim == 1);
        CHECK(h.at(1).dim == 1);
        CHECK(h.euler_consistent);
        CHECK(homology_dims_dense(c, 0, 1) == std::vector<int>{1, 1});
        // a cycle and its class
        Vec loop;
        loop.add(3, 1);
        loop.add(4, 1);
        loop.add(5, -1);
        auto cls = homology_class(c, h, 1, loop);
        CHECK(cls.size() == 1);
        CHECK(sgn(cls[0]) != 0);
    }

    TEST_CASE("truncation soundness is enforced")
    {
        ChainComplex c = circle();
        c.sound_lo = 0;
        c.sound_hi = 1;
        CHECK_THROWS_AS(homology(c, 0, 1), BoundaryUnsound);
        c.sound_lo = -1;
        c.sound_hi = 2;
        CHECK_NOTHROW(homology(c, 0, 1));
    }

    TEST_CASE("Euler identity with boundary ranks on a partial range")
    {
        ChainComplex c = circle();
        auto h = homology(c, 1, 1);
        CHECK(h.rank_in == 2);
        CHECK(h.euler_consistent);
    }

    TEST_CASE("induced maps on homology")
    {
        ChainComplex c = circle();
        LinearMap id(c.space, c.space, 0);
        for (int i = 0; i < c.space.dim(); ++i)
            id.add_entry(i, i, 1);
        auto m = induced_map_on_homology(id, c, c, 0, 1);
        CHECK(m.matrices[0][0][0] == 1);
        CHECK(m.matrices[1][0][0] == 1);
        // reflection v1 <-> v2 reverses the loop orientation
        LinearMap refl(c.space, c.space, 0);
        refl.add_entry(0, 0, 1);
        refl.add_entry(2, 1, 1);
        refl.add_entry(1, 2, 1);
        refl.add_entry(5, 3, 1);
        refl.add_entry(4, 4, -1);
        refl.add_entry(3, 5, 1);
        auto r = induced_map_on_homology(refl, c, c, 0, 1);
        CHECK(r.matrices[1][0][0] == -1);
        LinearMap bad(c.space, c.space, 0);
        bad.add_entry(3, 3, 1);
        CHECK_THROWS_AS(induced_map_on_homology(bad, c, c, 0, 1), NotAChainMap);
    }

    TEST_CASE("scalar parsing")
    {
        CHECK(parse_scalar("-3/6") == frac(-1, 2));
        CHECK(parse_scalar("+4") == 4);
        CHECK_THROWS(parse_scalar("1/0"));
        CHECK_THROWS(parse_scalar("x"));
        CHECK_THROWS(parse_scalar(""));
    }
}
