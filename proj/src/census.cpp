#include "tourney/census.hpp"

#include "tourney/edge_scores.hpp"
#include "tourney/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tourney {

namespace {

// Pair order of the serialization for 5 vertices.
constexpr std::array<std::pair<int, int>, 10> pairs5{{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
}};

bool pattern_beats(unsigned pattern, int u, int v) noexcept
{
    for (std::size_t i = 0; i < pairs5.size(); ++i) {
        const auto [a, b] = pairs5[i];
        if (a == u && b == v)
            return (pattern >> i) & 1u;
        if (a == v && b == u)
            return !((pattern >> i) & 1u);
    }
    return false;
}

// Directed Hamiltonian cycles of a 5-tournament given as a pattern.
int ham_cycles5(unsigned pattern)
{
    std::array<int, 4> rest{1, 2, 3, 4};
    int count = 0;
    do {
        int prev = 0;
        bool ok = true;
        for (int v : rest) {
            ok = ok && pattern_beats(pattern, prev, v);
            prev = v;
        }
        if (ok && pattern_beats(pattern, prev, 0))
            ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return count;
}

std::string canonical5(unsigned pattern)
{
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    std::string best(10, '1');
    do {
        // relabeled tournament: perm[u] -> perm[v] whenever u -> v
        std::string s(10, '0');
        for (std::size_t i = 0; i < pairs5.size(); ++i) {
            const auto [a, b] = pairs5[i];
            // find the original vertices mapped to a and b
            const int ua = static_cast<int>(std::find(perm.begin(), perm.end(), a) - perm.begin());
            const int ub = static_cast<int>(std::find(perm.begin(), perm.end(), b) - perm.begin());
            if (pattern_beats(pattern, ua, ub))
                s[i] = '1';
        }
        best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

template <class Fn>
void for_each_subset(Vertex n, Vertex k, Fn&& fn)
{
    if (k > n)
        return;
    std::vector<Vertex> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        fn(std::span<const Vertex>(subset));
        Vertex i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++subset[i - 1];
        for (Vertex j = i; j < k; ++j)
            subset[j] = subset[j - 1] + 1;
    }
}

} // namespace

std::int64_t count_k_cycles_bruteforce(const Tournament& t, Vertex k)
{
    if (k < 3 || k > t.order())
        return 0;
    std::int64_t total = 0;
    std::vector<Vertex> order(k);
    for_each_subset(t.order(), k, [&](std::span<const Vertex> subset) {
        // subset[0] is the fixed start, so each cycle is seen once
        std::copy(subset.begin(), subset.end(), order.begin());
        do {
            bool closed = t.beats(order[k - 1], order[0]);
            for (Vertex i = 0; closed && i + 1 < k; ++i)
                closed = t.beats(order[i], order[i + 1]);
            total += closed;
        } while (std::next_permutation(order.begin() + 1, order.end()));
    });
    return total;
}

ClassTable build_class_table()
{
    std::map<std::string, std::vector<unsigned>> by_canonical;
    for (unsigned pattern = 0; pattern < 1024; ++pattern)
        by_canonical[canonical5(pattern)].push_back(pattern);

    struct Entry {
        int ham;
        std::string canonical;
        std::vector<unsigned> members;
    };
    std::vector<Entry> entries;
    for (auto& [canonical, members] : by_canonical) {
        const unsigned rep = members.front();
        entries.push_back({ham_cycles5(rep), canonical, std::move(members)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return std::tie(x.ham, x.canonical) < std::tie(y.ham, y.canonical);
    });
    if (entries.size() != class_count)
        throw std::logic_error("expected 12 classes of 5-tournaments, found " + std::to_string(entries.size()));

    ClassTable table;
    for (std::size_t j = 0; j < class_count; ++j) {
        const Entry& e = entries[j];
        table.reps[j] = parse("5:" + e.canonical);
        table.canonical[j] = e.canonical;
        table.ham_counts[j] = e.ham;
        table.sizes[j] = static_cast<int>(e.members.size());
        for (unsigned pattern : e.members)
            table.index_of_pattern[pattern] = static_cast<std::uint8_t>(j);
    }
    return table;
}

const ClassTable& class_table()
{
    static const ClassTable table = build_class_table();
    return table;
}

unsigned pattern5(const Tournament& t, const std::array<Vertex, 5>& v) noexcept
{
    unsigned pattern = 0;
    for (std::size_t i = 0; i < pairs5.size(); ++i)
        if (t.beats(v[pairs5[i].first], v[pairs5[i].second]))
            pattern |= 1u << i;
    return pattern;
}

std::size_t classify5(const Tournament& t)
{
    if (t.order() != 5)
        throw Error(ErrorCode::WrongOrder, "classify5 needs 5 vertices, got " + std::to_string(t.order()));
    return class_table().index_of_pattern[pattern5(t, {0, 1, 2, 3, 4})];
}

Census5 census5(const Tournament& t)
{
    Census5 counts{};
    const auto& lookup = class_table().index_of_pattern;
    const Vertex n = t.order();
    std::array<Vertex, 5> v{};
    for (v[0] = 0; v[0] < n; ++v[0])
        for (v[1] = v[0] + 1; v[1] < n; ++v[1])
            for (v[2] = v[1] + 1; v[2] < n; ++v[2])
                for (v[3] = v[2] + 1; v[3] < n; ++v[3])
                    for (v[4] = v[3] + 1; v[4] < n; ++v[4])
                        ++counts[lookup[pattern5(t, v)]];
    return counts;
}

RQuantities r_quantities(const Tournament& t)
{
    RQuantities r{};
    auto choose2 = [](std::int64_t x) { return x * (x - 1) / 2; };
    for_each_arc_score(t, [&](Vertex, Vertex, const EdgeScore& e) {
        const std::int64_t a = e.a, b = e.b, c = e.c, d = e.d;
        r[0] += choose2(a) * c;
        r[1] += choose2(a) * d;
        r[2] += choose2(b) * c;
        r[3] += choose2(b) * d;
        r[4] += choose2(c) * a;
        r[5] += choose2(c) * b;
        r[6] += choose2(d) * a;
        r[7] += choose2(d) * b;
        r[8] += a * b * c;
        r[9] += a * b * d;
        r[10] += a * c * d;
        r[11] += b * c * d;
    });
    r[12] = binomial(t.order(), 5).convert_to<std::int64_t>();
    r[13] = t.order() <= 12 ? count_k_cycles_bruteforce(t, 5) : c5_exact(t).c5;
    return r;
}

RelationMatrix recover_matrix()
{
    RelationMatrix m{};
    const auto& table = class_table();
    for (std::size_t j = 0; j < class_count; ++j) {
        const RQuantities r = r_quantities(table.reps[j]);
        for (std::size_t i = 0; i < r_count; ++i)
            m[i][j] = r[i];
    }
    return m;
}

} // namespace tourney
