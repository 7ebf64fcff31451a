#include "tourney/error.hpp"
#include "tourney/tournament.hpp"

#include <doctest.h>

#include <numeric>

using namespace tourney;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    }
    catch (const Error& e) {
        return e.code();
    }
    FAIL("expected tourney::Error");
    return ErrorCode::BadFormat;
}

using Arcs = std::vector<std::pair<Vertex, Vertex>>;

} // namespace

TEST_SUITE("tournament") {

TEST_CASE("from_arcs builds the given orientation")
{
    const Arcs cycle{{0, 1}, {1, 2}, {2, 0}};
    const Tournament t = Tournament::from_arcs(3, cycle);
    CHECK(t.valid());
    CHECK(t.beats(0, 1));
    CHECK(t.beats(1, 2));
    CHECK(t.beats(2, 0));
    CHECK_FALSE(t.beats(1, 0));

    const Arcs one{{0, 1}};
    const Tournament pair = Tournament::from_arcs(2, one);
    CHECK(pair.out_degree(0) == 1);
    CHECK(pair.out_degree(1) == 0);
}

TEST_CASE("from_arcs rejects malformed arc lists")
{
    CHECK(code_of([] { Tournament::from_arcs(3, Arcs{{0, 1}, {1, 0}, {1, 2}, {2, 0}}); }) == ErrorCode::ConflictingArc);
    CHECK(code_of([] { Tournament::from_arcs(3, Arcs{{0, 1}, {1, 2}}); }) == ErrorCode::IncompleteTournament);
    CHECK(code_of([] { Tournament::from_arcs(3, Arcs{{0, 1}, {1, 3}, {2, 0}}); }) == ErrorCode::BadVertex);
    CHECK(code_of([] { Tournament::from_arcs(2, Arcs{{1, 1}}); }) == ErrorCode::BadVertex);
}

TEST_CASE("parse and serialize")
{
    const Tournament t = parse("3:101");
    CHECK(t.beats(0, 1));
    CHECK(t.beats(2, 0));
    CHECK(t.beats(1, 2));
    CHECK(serialize(Tournament::transitive(3)) == "3:111");
    CHECK(serialize(Tournament{}) == "0:");
    CHECK(parse("# a comment\n\n   4:111111  \n# trailing\n") == Tournament::transitive(4));
    CHECK(parse("1:").order() == 1);

    CHECK(code_of([] { parse("4:101"); }) == ErrorCode::LengthMismatch);
    CHECK(code_of([] { parse("3:1x1"); }) == ErrorCode::BadFormat);
    CHECK(code_of([] { parse("abc"); }) == ErrorCode::BadFormat);
    CHECK(code_of([] { parse("x:1"); }) == ErrorCode::BadFormat);
    CHECK(code_of([] { parse("# only a comment\n"); }) == ErrorCode::BadFormat);
    CHECK(code_of([] { parse("3:101\n3:101\n"); }) == ErrorCode::BadFormat);
    CHECK(code_of([] { parse("5000:"); }) == ErrorCode::BadParameter);
}

TEST_CASE("serialize/parse round trip on random tournaments up to n = 64")
{
    SplitMix64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<Vertex>(rng.between(0, 64));
        const Tournament t = Tournament::random(n, rng.uniform(), rng.next());
        const std::string text = serialize(t);
        CHECK(parse(text) == t);
        CHECK(serialize(parse(text)) == text);
    }
}

TEST_CASE("random tournaments")
{
    CHECK(Tournament::random(0, 0.5, 1).order() == 0);
    CHECK(Tournament::random(5, 1.0, 12345) == Tournament::transitive(5));
    CHECK(Tournament::random(5, 0.0, 12345) == Tournament::transitive(5).reverse());
    CHECK(serialize(Tournament::random(10, 0.5, 42)) == serialize(Tournament::random(10, 0.5, 42)));
    CHECK(serialize(Tournament::random(10, 0.5, 42)) != serialize(Tournament::random(10, 0.5, 43)));
    CHECK(code_of([] { Tournament::random(5, 1.5, 1); }) == ErrorCode::BadParameter);

    // a wide tournament crosses word boundaries
    const Tournament big = Tournament::random(200, 0.5, 3);
    CHECK(big.valid());
    std::uint64_t total = 0;
    for (Vertex v = 0; v < big.order(); ++v)
        total += big.out_degree(v) + 0 * big.in_degree(v);
    CHECK(total == 200u * 199u / 2u);
}

TEST_CASE("SplitMix64 reference stream")
{
    // first outputs for seed 0 (published reference values)
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafull);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
    CHECK(rng.next() == 0x06c45d188009454full);
}

TEST_CASE("transitive")
{
    const Tournament t = Tournament::transitive(4);
    CHECK(t.out_degrees() == std::vector<Vertex>{3, 2, 1, 0});
    CHECK(Tournament::transitive(1).valid());
    CHECK(Tournament::transitive(0).order() == 0);
}

TEST_CASE("circulant")
{
    const Tournament c5 = Tournament::circulant(5, {1, 2});
    CHECK(c5.valid());
    for (Vertex v = 0; v < 5; ++v)
        CHECK(c5.out_degree(v) == 2);
    CHECK(Tournament::circulant(3, {1}) == parse("3:101"));
    CHECK(Tournament::circulant(1, {}).order() == 1);
    CHECK(code_of([] { Tournament::circulant(5, {1, 4}); }) == ErrorCode::NotATournament);
    CHECK(code_of([] { Tournament::circulant(4, {1, 2}); }) == ErrorCode::NotATournament);
    CHECK(code_of([] { Tournament::circulant(5, {1, 2, 7}); }) == ErrorCode::BadParameter);
}

TEST_CASE("quadratic residue tournaments")
{
    for (Vertex q : {3u, 7u, 11u, 19u, 23u, 43u, 103u}) {
        const Tournament t = Tournament::quadratic_residue(q);
        CHECK(t.valid());
        for (Vertex v = 0; v < q; ++v)
            CHECK(t.out_degree(v) == (q - 1) / 2);
    }
    // squares mod 7 are {1, 2, 4}
    const Tournament q7 = Tournament::quadratic_residue(7);
    CHECK(q7.beats(0, 1));
    CHECK(q7.beats(0, 2));
    CHECK(q7.beats(0, 4));
    CHECK(q7.beats(3, 0));
    CHECK(code_of([] { Tournament::quadratic_residue(5); }) == ErrorCode::BadParameter);
    CHECK(code_of([] { Tournament::quadratic_residue(15); }) == ErrorCode::BadParameter);
    CHECK(code_of([] { Tournament::quadratic_residue(1); }) == ErrorCode::BadParameter);
}

TEST_CASE("reverse and relabel")
{
    const Tournament t4 = Tournament::transitive(4);
    const std::vector<Vertex> flip{3, 2, 1, 0};
    CHECK(t4.reverse() == t4.relabel(flip));

    SplitMix64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto n = static_cast<Vertex>(rng.between(0, 70));
        const Tournament t = Tournament::random(n, 0.5, rng.next());
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (Vertex j = n; j > 1; --j)
            std::swap(perm[j - 1], perm[rng.next() % j]);

        const Tournament r = t.reverse();
        const Tournament p = t.relabel(perm);
        CHECK(r.valid());
        CHECK(p.valid());
        CHECK(r.reverse() == t);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v)
                    REQUIRE(p.beats(perm[u], perm[v]) == t.beats(u, v));
    }

    CHECK(code_of([&] { t4.relabel(std::vector<Vertex>{0, 1, 1, 2}); }) == ErrorCode::BadPermutation);
    CHECK(code_of([&] { t4.relabel(std::vector<Vertex>{0, 1, 2}); }) == ErrorCode::BadPermutation);
    CHECK(code_of([&] { t4.relabel(std::vector<Vertex>{0, 1, 2, 4}); }) == ErrorCode::BadPermutation);
}

TEST_CASE("induced subtournaments")
{
    const Tournament q7 = Tournament::quadratic_residue(7);
    const auto out = q7.out_neighbours(0);
    CHECK(out == std::vector<Vertex>{1, 2, 4});
    const Tournament sub = q7.induced(out);
    CHECK(sub.order() == 3);
    // 1 -> 2 (diff 1), 2 -> 4 (diff 2), 4 -> 1 (diff 4)
    CHECK(sub == parse("3:101"));
    CHECK(code_of([&] { q7.induced(std::vector<Vertex>{1, 1}); }) == ErrorCode::BadVertex);
}

TEST_CASE("degree sums")
{
    SplitMix64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<Vertex>(rng.between(0, 130));
        const Tournament t = Tournament::random(n, rng.uniform(), rng.next());
        std::uint64_t out = 0, in = 0;
        for (Vertex v = 0; v < n; ++v) {
            out += t.out_degree(v);
            in += t.in_degree(v);
        }
        CHECK(out == std::uint64_t{n} * (n ? n - 1 : 0) / 2);
        CHECK(in == out);
    }
}

}
