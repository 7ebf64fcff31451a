#include "tourney/edge_scores.hpp"

#include "tourney/error.hpp"

#include <limits>

namespace tourney {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide value, const char* what)
{
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::BadParameter, std::string(what) + " exceeds the 64-bit range");
    return static_cast<std::int64_t>(value);
}

} // namespace

EdgeScore edge_score(const Tournament& t, Vertex u, Vertex v)
{
    if (u >= t.order() || v >= t.order())
        throw Error(ErrorCode::BadVertex, "vertex out of range");
    if (!t.beats(u, v))
        throw Error(ErrorCode::NotAnArc,
                    "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
    return arc_score(t, u, v);
}

C5Breakdown c5_exact(const Tournament& t)
{
    const std::int64_t n = t.order();
    Wide s1 = 0;
    Wide s2 = 0;
    for_each_arc_score(t, [&](Vertex, Vertex, const EdgeScore& e) {
        const Wide ab = Wide{e.a} + e.b;
        const Wide cd = Wide{e.c} + e.d;
        const Wide a_minus_b = Wide{e.a} - e.b;
        const Wide c_minus_d = Wide{e.c} - e.d;
        s1 += cd * a_minus_b * a_minus_b + ab * c_minus_d * c_minus_d;
        s2 += ab * cd;
    });

    const Integer choose5 = binomial(n, 5);
    const Wide eight_c5 = 6 * static_cast<Wide>(choose5.convert_to<std::int64_t>()) - s1 + 2 * s2;
    if (eight_c5 % 8 != 0 || eight_c5 < 0)
        throw std::logic_error("5-cycle identity produced a non-integral count");

    C5Breakdown result;
    result.base = Rational(3 * choose5, 4);
    result.s1 = narrow(s1, "s1");
    result.s2 = narrow(s2, "s2");
    result.c5 = narrow(eight_c5 / 8, "c5");
    return result;
}

std::int64_t c3_closed(const Tournament& t)
{
    const std::int64_t n = t.order();
    std::int64_t transitive_triples = 0;
    for (Vertex u = 0; u < t.order(); ++u) {
        const std::int64_t od = t.out_degree(u);
        transitive_triples += od * (od - 1) / 2;
    }
    return binomial(n, 3).convert_to<std::int64_t>() - transitive_triples;
}

Rational score_variance(const Tournament& t)
{
    // sum (od - (n-1)/2)^2 = sum (2 od - (n-1))^2 / 4
    const std::int64_t n = t.order();
    Integer total = 0;
    for (Vertex u = 0; u < t.order(); ++u) {
        const std::int64_t dev = 2 * static_cast<std::int64_t>(t.out_degree(u)) - (n - 1);
        total += dev * dev;
    }
    return Rational(total, 4);
}

Rational upper_bound_c5(std::int64_t n)
{
    const Rational half_rest(n - 2, 2);
    return Rational(3 * binomial(n, 5), 4) + Rational(binomial(n, 2), 4) * half_rest * half_rest;
}

Rational lower_bound_c5(const Tournament& t)
{
    const std::int64_t n = t.order();
    return Rational(3 * binomial(n, 5), 4) - Rational(binomial(n - 2, 2), 2) * score_variance(t) -
           Rational(3 * binomial(n, 3), 8);
}

SubtractedSumChain subtracted_sum_chain(const Tournament& t)
{
    const std::int64_t n = t.order();
    const auto degrees = t.out_degrees();
    Wide s1 = 0;
    Wide degree_form = 0;
    for_each_arc_score(t, [&](Vertex u, Vertex v, const EdgeScore& e) {
        const Wide a_minus_b = Wide{e.a} - e.b;
        const Wide c_minus_d = Wide{e.c} - e.d;
        s1 += (Wide{e.c} + e.d) * a_minus_b * a_minus_b + (Wide{e.a} + e.b) * c_minus_d * c_minus_d;

        const Wide od_u = degrees[u];
        const Wide od_v = degrees[v];
        const Wide id_u = n - 1 - od_u;
        degree_form += (od_v - id_u) * (od_v - id_u) + (od_u - od_v - 1) * (od_u - od_v - 1);
    });

    SubtractedSumChain chain;
    chain.s1 = narrow(s1, "s1");
    chain.mid = narrow(degree_form * (n - 2), "mid");
    chain.vertexform = 4 * Rational(binomial(n - 2, 2)) * score_variance(t) + 3 * Rational(binomial(n, 3));
    return chain;
}

Rational max_c3(std::int64_t n)
{
    if (n % 2 == 1)
        return Rational(Integer(n) * (n + 1) * (n - 1), 24);
    return Rational(Integer(n) * (n + 2) * (n - 2), 24);
}

Rational max_c4(std::int64_t n)
{
    if (n < 4)
        return 0;
    if (n % 2 == 1)
        return Rational(Integer(n) * (n + 1) * (n - 1) * (n - 3), 48);
    return Rational(Integer(n) * (n + 2) * (n - 2) * (n - 3), 48);
}

Rational expected_c5(std::int64_t n)
{
    return Rational(3 * binomial(n, 5), 4);
}

} // namespace tourney
