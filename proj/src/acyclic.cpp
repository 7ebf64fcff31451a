#include "tourney/acyclic.hpp"

#include "tourney/error.hpp"

#include <numeric>
#include <vector>

namespace tourney {

namespace {

void check_k(Vertex k)
{
    if (k == 0)
        throw Error(ErrorCode::BadParameter, "subtournament size k must be at least 1");
}

// A k-subset is transitive iff its internal out-degrees are exactly 0..k-1.
bool transitive_subset(const Tournament& t, std::span<const Vertex> subset, std::vector<bool>& seen)
{
    const auto k = static_cast<Vertex>(subset.size());
    std::fill(seen.begin(), seen.end(), false);
    for (Vertex u : subset) {
        Vertex od = 0;
        for (Vertex v : subset)
            od += t.beats(u, v);
        if (seen[od])
            return false;
        seen[od] = true;
    }
    return k > 0;
}

} // namespace

std::int64_t count_acyclic(const Tournament& t, Vertex k)
{
    check_k(k);
    const Vertex n = t.order();
    if (k > n)
        return 0;
    std::vector<Vertex> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    std::vector<bool> seen(k);
    std::int64_t count = 0;
    while (true) {
        count += transitive_subset(t, subset, seen);
        Vertex i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return count;
        ++subset[i - 1];
        for (Vertex j = i; j < k; ++j)
            subset[j] = subset[j - 1] + 1;
    }
}

std::int64_t count_acyclic_recursive(const Tournament& t, Vertex k)
{
    check_k(k);
    if (k > t.order())
        return 0;
    if (k == 1)
        return t.order();
    std::int64_t count = 0;
    for (Vertex v = 0; v < t.order(); ++v) {
        const auto out = t.out_neighbours(v);
        if (out.size() + 1 >= k)
            count += count_acyclic_recursive(t.induced(out), k - 1);
    }
    return count;
}

Rational f_lower(const Rational& x, Vertex k)
{
    check_k(k);
    if (k > 63 && x < Rational(Integer(1) << 62))
        return 0;
    const Integer threshold = (Integer(1) << (k - 1)) - 1;
    if (x <= Rational(threshold))
        return 0;
    Rational product = 1;
    for (Vertex i = 0; i < k; ++i)
        product *= x - Rational((Integer(1) << i) - 1);
    return product / Rational(Integer(1) << (k * (k - 1) / 2));
}

Rational f_lower(std::int64_t n, Vertex k)
{
    return f_lower(Rational(n), k);
}

Rational g_expected(std::int64_t n, Vertex k)
{
    check_k(k);
    if (n < static_cast<std::int64_t>(k))
        return 0;
    Integer falling = 1;
    for (Vertex i = 0; i < k; ++i)
        falling *= n - i;
    return Rational(falling, Integer(1) << (static_cast<std::uint64_t>(k) * (k - 1) / 2));
}

} // namespace tourney
