#ifndef TOURNEY_TOURNAMENT_HPP
#define TOURNEY_TOURNAMENT_HPP

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tourney {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr int bits_per_word = 64;

/// Largest vertex count accepted by constructors and the parser.
inline constexpr Vertex max_order = 4096;

/**
 * A tournament on vertices 0..n-1: every unordered pair carries exactly one
 * arc. Each vertex owns an out-row and an in-row bitset, so "does u beat v"
 * is a single bit test and neighbourhood intersections are word-wise ANDs.
 *
 * Instances are immutable once built; the static constructors validate their
 * input and throw tourney::Error on failure.
 */
class Tournament {
public:
    Tournament() = default;

    static Tournament from_arcs(Vertex n, std::span<const std::pair<Vertex, Vertex>> arcs);

    /// i -> j iff i < j.
    static Tournament transitive(Vertex n);

    /// i -> j iff (j - i) mod n is in offsets. Exactly one of d, n - d must be
    /// present for every d in 1..n-1, which forces n odd.
    static Tournament circulant(Vertex n, const std::set<Vertex>& offsets);

    /// The Paley tournament: i -> j iff j - i is a nonzero square mod q.
    /// Requires q prime with q = 3 (mod 4).
    static Tournament quadratic_residue(Vertex q);

    /// Orients each pair (i, j), i < j, as i -> j with probability p, drawing
    /// from a SplitMix64 stream seeded with `seed`.
    static Tournament random(Vertex n, double p, std::uint64_t seed);

    Vertex order() const noexcept { return n_; }

    bool beats(Vertex u, Vertex v) const noexcept
    {
        return (out_[u * words_ + v / bits_per_word] >> (v % bits_per_word)) & 1u;
    }

    std::span<const Word> out_row(Vertex u) const noexcept
    {
        return {out_.data() + static_cast<std::size_t>(u) * words_, words_};
    }

    std::span<const Word> in_row(Vertex u) const noexcept
    {
        return {in_.data() + static_cast<std::size_t>(u) * words_, words_};
    }

    Vertex out_degree(Vertex u) const noexcept;
    Vertex in_degree(Vertex u) const noexcept { return n_ - 1 - out_degree(u); }
    std::vector<Vertex> out_degrees() const;
    std::vector<Vertex> out_neighbours(Vertex u) const;

    /// Number of 64-bit words in each row.
    std::size_t words() const noexcept { return words_; }

    Tournament reverse() const;

    /// Vertex u of the input becomes perm[u] of the result.
    Tournament relabel(std::span<const Vertex> perm) const;

    /// The subtournament induced on `vertices`, renumbered 0..k-1 in the
    /// order given.
    Tournament induced(std::span<const Vertex> vertices) const;

    /// Checks antisymmetry, completeness, absence of loops and that the in
    /// rows mirror the out rows. Used by tests; constructors maintain this.
    bool valid() const;

    friend bool operator==(const Tournament& a, const Tournament& b) noexcept
    {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    explicit Tournament(Vertex n);
    void set_arc(Vertex u, Vertex v) noexcept;

    Vertex n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> out_;
    std::vector<Word> in_;
};

/// Text form "<n>:<bits>": one character per pair (i, j), i < j, in
/// lexicographic order, '1' meaning i -> j.
std::string serialize(const Tournament& t);

/// Accepts one record, optionally surrounded by whitespace, blank lines and
/// lines starting with '#'.
Tournament parse(std::string_view text);

/// Number of set bits in the AND of two rows.
inline Vertex intersection_count(std::span<const Word> a, std::span<const Word> b) noexcept
{
    Vertex count = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        count += static_cast<Vertex>(__builtin_popcountll(a[i] & b[i]));
    return count;
}

/// SplitMix64 (Steele, Lea and Flood 2014). Small, portable and fully
/// specified, so seeded streams are reproducible everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept
    {
        return lo + next() % (hi - lo + 1);
    }

private:
    std::uint64_t state_;
};

} // namespace tourney

#endif
