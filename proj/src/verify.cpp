#include "tourney/verify.hpp"

#include "tourney/acyclic.hpp"
#include "tourney/census.hpp"
#include "tourney/edge_scores.hpp"
#include "tourney/error.hpp"
#include "tourney/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tourney {

namespace {

class Checker {
public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    /// Records one instance of `name`. Only the first failure is kept.
    void check(const std::string& name, bool ok, const std::string& detail = {},
               const Tournament* witness = nullptr)
    {
        PropertyResult& p = find(name);
        if (!p.passed)
            return;
        ++p.checked;
        if (!ok) {
            p.passed = false;
            p.detail = detail;
            if (witness)
                p.counterexample = serialize(*witness);
        }
    }

private:
    PropertyResult& find(const std::string& name)
    {
        for (auto& p : report_.properties)
            if (p.name == name)
                return p;
        PropertyResult& added = report_.properties.emplace_back();
        added.name = name;
        return added;
    }

    VerifyReport& report_;
};

struct Sample {
    Tournament t;
    std::vector<Vertex> perm;
};

// Random tournament with order in [lo, hi]. Every fourth sample is skewed
// towards transitive so that score variance and the bounds get exercised.
Sample draw(SplitMix64& rng, Vertex lo, Vertex hi)
{
    const auto n = static_cast<Vertex>(rng.between(lo, hi));
    const double p = rng.next() % 4 == 0 ? 0.85 : 0.5;
    Sample s{Tournament::random(n, p, rng.next()), std::vector<Vertex>(n)};
    std::iota(s.perm.begin(), s.perm.end(), 0);
    for (Vertex i = n; i > 1; --i)
        std::swap(s.perm[i - 1], s.perm[rng.next() % i]);
    return s;
}

std::string str(const Rational& r) { return format_rational(r); }

void identities(Checker& c, std::uint32_t cases, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    for (std::uint32_t i = 0; i < cases; ++i) {
        const auto [t, perm] = draw(rng, 0, 12);
        const std::int64_t n = t.order();

        c.check("tournament-invariant", t.valid(), "invalid adjacency", &t);
        c.check("serialize-roundtrip", parse(serialize(t)) == t, "parse(serialize(T)) != T", &t);

        bool degrees_ok = true;
        std::int64_t d_sum = 0;
        Integer edge_side = 0;
        for_each_arc_score(t, [&](Vertex u, Vertex v, const EdgeScore& e) {
            degrees_ok = degrees_ok && e.a + e.b + e.c + e.d == n - 2 && t.out_degree(u) == 1 + e.a + e.c &&
                         t.in_degree(u) == e.b + e.d && t.out_degree(v) == e.a + e.d &&
                         t.in_degree(v) == 1 + e.b + e.c;
            d_sum += e.d;
            edge_side += t.out_degree(v);
        });
        Integer vertex_side = 0;
        for (Vertex w = 0; w < t.order(); ++w)
            vertex_side += Integer(t.in_degree(w)) * t.out_degree(w);
        c.check("edge-score-degree-identities", degrees_ok, "a+b+c+d or od/id relation violated", &t);
        c.check("edge-sum-to-vertex-sum", edge_side == vertex_side,
                "sum od(v) over arcs " + edge_side.str() + " != sum id*od " + vertex_side.str(), &t);

        const C5Breakdown f = c5_exact(t);
        const std::int64_t brute5 = count_k_cycles_bruteforce(t, 5);
        c.check("c5-formula-equals-bruteforce", f.c5 == brute5,
                "formula " + std::to_string(f.c5) + " brute " + std::to_string(brute5), &t);
        c.check("c5-integer-identity",
                Integer(8) * f.c5 == 6 * binomial(n, 5) - f.s1 + 2 * Integer(f.s2) && f.s1 >= 0 && f.s2 >= 0,
                "8 c5 != 6 C(n,5) - s1 + 2 s2", &t);

        const std::int64_t c3 = c3_closed(t);
        const std::int64_t brute3 = count_k_cycles_bruteforce(t, 3);
        c.check("c3-closed-equals-bruteforce", c3 == brute3,
                "closed " + std::to_string(c3) + " brute " + std::to_string(brute3), &t);
        c.check("d-sum-equals-three-c3", d_sum == 3 * c3, "sum D = " + std::to_string(d_sum), &t);

        const Rational lower = lower_bound_c5(t);
        const Rational upper = upper_bound_c5(n);
        c.check("c5-bound-sandwich", lower <= f.c5 && f.c5 <= upper,
                str(lower) + " <= " + std::to_string(f.c5) + " <= " + str(upper) + " fails", &t);

        if (n >= 3) {
            const SubtractedSumChain chain = subtracted_sum_chain(t);
            c.check("subtracted-sum-chain", chain.s1 == f.s1 && chain.s1 <= chain.mid && chain.mid == chain.vertexform,
                    "s1=" + std::to_string(chain.s1) + " mid=" + std::to_string(chain.mid) +
                        " vertexform=" + str(chain.vertexform),
                    &t);
        }

        const std::int64_t brute4 = count_k_cycles_bruteforce(t, 4);
        c.check("reference-maxima", c3 <= max_c3(n) && brute4 <= max_c4(n),
                "c3=" + std::to_string(c3) + " c4=" + std::to_string(brute4), &t);

        const Tournament rev = t.reverse();
        bool scores_swap = true;
        for_each_arc_score(t, [&](Vertex u, Vertex v, const EdgeScore& e) {
            scores_swap = scores_swap && edge_score(rev, v, u) == EdgeScore{e.b, e.a, e.c, e.d};
        });
        c.check("reversal-invariance",
                rev.valid() && scores_swap && c5_exact(rev).c5 == f.c5 && count_k_cycles_bruteforce(rev, 5) == brute5 &&
                    count_k_cycles_bruteforce(rev, 4) == brute4 && c3_closed(rev) == c3,
                "counts or scores change under reversal", &t);

        const Tournament rel = t.relabel(perm);
        c.check("relabel-invariance",
                rel.valid() && c5_exact(rel).c5 == f.c5 && count_k_cycles_bruteforce(rel, 5) == brute5 &&
                    count_k_cycles_bruteforce(rel, 4) == brute4 && c3_closed(rel) == c3 &&
                    lower_bound_c5(rel) == lower && score_variance(rel) == score_variance(t),
                "counts or bounds change under relabeling", &t);
    }
}

void matrix(Checker& c, std::uint32_t cases, std::uint64_t seed)
{
    const ClassTable& table = class_table();
    std::array<int, class_count> hams = table.ham_counts;
    std::sort(hams.begin(), hams.end());
    const int labeled = std::accumulate(table.sizes.begin(), table.sizes.end(), 0);
    c.check("class-table", labeled == 1024 && hams == std::array<int, class_count>{0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3},
            "classes do not partition 1024 labeled tournaments with ham counts [0^6,1^3,2^2,3]");

    // classify5 is constant on isomorphism classes and separates them
    for (std::size_t j = 0; j < class_count; ++j) {
        std::array<Vertex, 5> perm{0, 1, 2, 3, 4};
        bool ok = classify5(table.reps[j]) == j;
        do {
            ok = ok && classify5(table.reps[j].relabel(perm)) == j;
        } while (ok && std::next_permutation(perm.begin(), perm.end()));
        c.check("classify5-isomorphism-invariant", ok, "class " + std::to_string(j) + " not closed under relabeling",
                &table.reps[j]);
    }

    const RelationMatrix m = recover_matrix();
    std::array<std::int64_t, class_count> row14 = m[13];
    std::sort(row14.begin(), row14.end());
    c.check("matrix-row13-all-ones", std::all_of(m[12].begin(), m[12].end(), [](auto x) { return x == 1; }),
            "row 13 is not all ones");
    c.check("matrix-row14-multiset", row14 == std::array<std::int64_t, class_count>{0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3},
            "row 14 is not a permutation of the 5-cycle counts");
    for (std::size_t j = 0; j < class_count; ++j) {
        std::int64_t rhs = 6 * m[12][j];
        for (std::size_t i = 0; i < 8; ++i)
            rhs -= 2 * m[i][j];
        for (std::size_t i = 8; i < 12; ++i)
            rhs += 2 * m[i][j];
        c.check("matrix-row-relation", 8 * m[13][j] == rhs, "column " + std::to_string(j) + " violates the relation",
                &table.reps[j]);
    }

    SplitMix64 rng(seed);
    for (std::uint32_t k = 0; k < cases; ++k) {
        const Tournament t = draw(rng, 5, 10).t;
        const Census5 census = census5(t);
        const RQuantities r = r_quantities(t);

        std::int64_t weighted = 0;
        for (std::size_t j = 0; j < class_count; ++j)
            weighted += table.ham_counts[j] * census[j];
        c.check("census-cycle-count", weighted == count_k_cycles_bruteforce(t, 5),
                "sum ham_count * census = " + std::to_string(weighted), &t);

        bool linear = true;
        for (std::size_t i = 0; i < r_count; ++i) {
            std::int64_t predicted = 0;
            for (std::size_t j = 0; j < class_count; ++j)
                predicted += m[i][j] * census[j];
            linear = linear && predicted == r[i];
        }
        c.check("r-quantities-linear-in-census", linear, "r != M * census", &t);

        std::int64_t rhs = 6 * r[12];
        for (std::size_t i = 0; i < 8; ++i)
            rhs -= 2 * r[i];
        for (std::size_t i = 8; i < 12; ++i)
            rhs += 2 * r[i];
        c.check("r-quantities-row-relation", 8 * r[13] == rhs, "8 r14 != row combination", &t);
    }
}

void acyclic(Checker& c, std::uint32_t cases, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    for (std::uint32_t i = 0; i < cases; ++i) {
        const auto [t, perm] = draw(rng, 1, 12);
        const std::int64_t n = t.order();
        const auto k = static_cast<Vertex>(rng.between(1, 5));
        const std::int64_t direct = count_acyclic(t, k);
        const Rational f = f_lower(n, k);
        c.check("acyclic-lower-bound", direct >= f,
                "count " + std::to_string(direct) + " < f = " + str(f) + " (k=" + std::to_string(k) + ")", &t);
        c.check("acyclic-recursive-equality", count_acyclic_recursive(t, k) == direct,
                "recursive count differs (k=" + std::to_string(k) + ")", &t);
        c.check("acyclic-triples-complement",
                count_acyclic(t, 3) + count_k_cycles_bruteforce(t, 3) == binomial(n, 3),
                "acyclic + cyclic triples != C(n,3)", &t);
        c.check("acyclic-invariance",
                count_acyclic(t.reverse(), k) == direct && count_acyclic(t.relabel(perm), k) == direct,
                "count changes under reversal or relabeling", &t);
    }

    // f/g increases with n and is within 1e-2 of 1 at n = 100 * 2^k. The gap
    // is about sum_i (2^i - 1 - i) / n, so 10 * 2^k is too small once k > 3.
    for (Vertex k = 3; k <= 5; ++k) {
        const std::int64_t top = 100 * (std::int64_t{1} << k);
        Rational previous = -1;
        bool increasing = true;
        for (std::int64_t n = std::int64_t{1} << (k - 1); n <= top; ++n) {
            const Rational ratio = f_lower(n, k) / g_expected(n, k);
            increasing = increasing && ratio > previous;
            previous = ratio;
        }
        c.check("f-over-g-limit", increasing && Rational(1) - previous < Rational(1, 100),
                "k=" + std::to_string(k) + " ratio " + str(previous));
    }
}

} // namespace

Suite parse_suite(std::string_view name)
{
    if (name == "identities")
        return Suite::Identities;
    if (name == "matrix")
        return Suite::Matrix;
    if (name == "acyclic")
        return Suite::Acyclic;
    if (name == "all")
        return Suite::All;
    throw Error(ErrorCode::BadParameter, "unknown suite '" + std::string(name) + "'");
}

bool VerifyReport::passed() const
{
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

std::string VerifyReport::text() const
{
    std::ostringstream out;
    for (const auto& p : properties) {
        if (p.passed) {
            out << "ok   " << p.name << " (" << p.checked << " checked)\n";
        }
        else {
            out << "FAIL " << p.name << ": " << p.detail << "\n";
            if (!p.counterexample.empty())
                out << "     counterexample " << p.counterexample << "\n";
        }
    }
    return out.str();
}

VerifyReport verify(Suite suite, std::uint32_t cases, std::uint64_t seed)
{
    VerifyReport report;
    Checker checker(report);
    if (suite == Suite::Identities || suite == Suite::All)
        identities(checker, cases, seed);
    if (suite == Suite::Matrix || suite == Suite::All)
        matrix(checker, cases, seed);
    if (suite == Suite::Acyclic || suite == Suite::All)
        acyclic(checker, cases, seed);
    return report;
}

} // namespace tourney
