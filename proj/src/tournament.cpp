#include "tourney/tournament.hpp"

#include "tourney/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace tourney {

namespace {

void check_order(std::uint64_t n)
{
    if (n > max_order)
        throw Error(ErrorCode::BadParameter,
                    "tournament order " + std::to_string(n) + " exceeds " + std::to_string(max_order));
}

bool is_prime(Vertex q)
{
    if (q < 2)
        return false;
    for (Vertex d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Tournament::Tournament(Vertex n)
    : n_(n),
      words_((n + bits_per_word - 1) / bits_per_word),
      out_(static_cast<std::size_t>(n) * words_, 0),
      in_(static_cast<std::size_t>(n) * words_, 0)
{
}

void Tournament::set_arc(Vertex u, Vertex v) noexcept
{
    out_[u * words_ + v / bits_per_word] |= Word{1} << (v % bits_per_word);
    in_[v * words_ + u / bits_per_word] |= Word{1} << (u % bits_per_word);
}

Tournament Tournament::from_arcs(Vertex n, std::span<const std::pair<Vertex, Vertex>> arcs)
{
    check_order(n);
    Tournament t(n);
    for (auto [u, v] : arcs) {
        if (u >= n || v >= n || u == v)
            throw Error(ErrorCode::BadVertex,
                        "arc (" + std::to_string(u) + "," + std::to_string(v) + ") is not a pair of distinct vertices below " +
                            std::to_string(n));
        if (t.beats(u, v) || t.beats(v, u))
            throw Error(ErrorCode::ConflictingArc,
                        "pair {" + std::to_string(u) + "," + std::to_string(v) + "} given twice");
        t.set_arc(u, v);
    }
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    if (arcs.size() != pairs)
        throw Error(ErrorCode::IncompleteTournament,
                    std::to_string(pairs - arcs.size()) + " pair(s) have no arc");
    return t;
}

Tournament Tournament::transitive(Vertex n)
{
    check_order(n);
    Tournament t(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            t.set_arc(i, j);
    return t;
}

Tournament Tournament::circulant(Vertex n, const std::set<Vertex>& offsets)
{
    check_order(n);
    for (Vertex d : offsets)
        if (d == 0 || d >= n)
            throw Error(ErrorCode::BadParameter,
                        "offset " + std::to_string(d) + " outside 1.." + std::to_string(n > 0 ? n - 1 : 0));
    for (Vertex d = 1; d < n; ++d)
        if (offsets.count(d) == offsets.count(n - d))
            throw Error(ErrorCode::NotATournament,
                        "exactly one of " + std::to_string(d) + " and " + std::to_string(n - d) +
                            " must be an offset");
    Tournament t(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex d : offsets)
            t.set_arc(i, (i + d) % n);
    return t;
}

Tournament Tournament::quadratic_residue(Vertex q)
{
    if (!is_prime(q) || q % 4 != 3)
        throw Error(ErrorCode::BadParameter,
                    std::to_string(q) + " is not a prime congruent to 3 mod 4");
    std::set<Vertex> squares;
    for (std::uint64_t x = 1; x < q; ++x)
        squares.insert(static_cast<Vertex>(x * x % q));
    return circulant(q, squares);
}

Tournament Tournament::random(Vertex n, double p, std::uint64_t seed)
{
    check_order(n);
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorCode::BadParameter, "arc probability must lie in [0,1]");
    SplitMix64 rng(seed);
    Tournament t(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            if (rng.uniform() < p)
                t.set_arc(i, j);
            else
                t.set_arc(j, i);
        }
    return t;
}

Vertex Tournament::out_degree(Vertex u) const noexcept
{
    Vertex count = 0;
    for (Word w : out_row(u))
        count += static_cast<Vertex>(__builtin_popcountll(w));
    return count;
}

std::vector<Vertex> Tournament::out_degrees() const
{
    std::vector<Vertex> result(n_);
    for (Vertex u = 0; u < n_; ++u)
        result[u] = out_degree(u);
    return result;
}

std::vector<Vertex> Tournament::out_neighbours(Vertex u) const
{
    std::vector<Vertex> result;
    const auto row = out_row(u);
    for (std::size_t w = 0; w < row.size(); ++w)
        for (Word bits = row[w]; bits; bits &= bits - 1)
            result.push_back(static_cast<Vertex>(w * bits_per_word + __builtin_ctzll(bits)));
    return result;
}

Tournament Tournament::reverse() const
{
    Tournament t = *this;
    std::swap(t.out_, t.in_);
    return t;
}

Tournament Tournament::relabel(std::span<const Vertex> perm) const
{
    if (perm.size() != n_)
        throw Error(ErrorCode::BadPermutation,
                    "permutation has " + std::to_string(perm.size()) + " entries, expected " + std::to_string(n_));
    std::vector<bool> seen(n_, false);
    for (Vertex p : perm) {
        if (p >= n_ || seen[p])
            throw Error(ErrorCode::BadPermutation, "not a bijection on 0.." + std::to_string(n_ - 1));
        seen[p] = true;
    }
    Tournament t(n_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            if (beats(u, v))
                t.set_arc(perm[u], perm[v]);
    return t;
}

Tournament Tournament::induced(std::span<const Vertex> vertices) const
{
    const auto k = static_cast<Vertex>(vertices.size());
    for (Vertex v : vertices)
        if (v >= n_)
            throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " out of range");
    Tournament t(k);
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j) {
            if (vertices[i] == vertices[j])
                throw Error(ErrorCode::BadVertex, "repeated vertex " + std::to_string(vertices[i]));
            if (beats(vertices[i], vertices[j]))
                t.set_arc(i, j);
            else
                t.set_arc(j, i);
        }
    return t;
}

bool Tournament::valid() const
{
    if (out_.size() != static_cast<std::size_t>(n_) * words_ || in_.size() != out_.size())
        return false;
    std::uint64_t degree_sum = 0;
    for (Vertex u = 0; u < n_; ++u) {
        if (beats(u, u))
            return false;
        for (Vertex v = u + 1; v < n_; ++v)
            if (beats(u, v) == beats(v, u))
                return false;
        for (Vertex v = 0; v < n_; ++v) {
            const bool in_bit = (in_row(v)[u / bits_per_word] >> (u % bits_per_word)) & 1u;
            if (in_bit != beats(u, v))
                return false;
        }
        // no stray bits past n
        if (n_ % bits_per_word != 0 && words_ > 0) {
            const Word mask = ~Word{0} << (n_ % bits_per_word);
            if ((out_row(u).back() & mask) || (in_row(u).back() & mask))
                return false;
        }
        degree_sum += out_degree(u);
    }
    return degree_sum == static_cast<std::uint64_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2;
}

std::string serialize(const Tournament& t)
{
    const Vertex n = t.order();
    std::string text = std::to_string(n) + ":";
    text.reserve(text.size() + static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            text.push_back(t.beats(i, j) ? '1' : '0');
    return text;
}

Tournament parse(std::string_view text)
{
    std::string_view record;
    bool found = false;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (line.empty() || line.front() == '#')
            continue;
        if (found)
            throw Error(ErrorCode::BadFormat, "more than one tournament record");
        record = line;
        found = true;
    }
    if (!found)
        throw Error(ErrorCode::BadFormat, "no tournament record");

    const auto colon = record.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw Error(ErrorCode::BadFormat, "expected <n>:<bits>");
    std::uint64_t n = 0;
    const auto [end, ec] = std::from_chars(record.data(), record.data() + colon, n);
    if (ec != std::errc{} || end != record.data() + colon)
        throw Error(ErrorCode::BadFormat, "bad vertex count '" + std::string(record.substr(0, colon)) + "'");
    check_order(n);

    const std::string_view bits = record.substr(colon + 1);
    for (char ch : bits)
        if (ch != '0' && ch != '1')
            throw Error(ErrorCode::BadFormat, std::string("illegal character '") + ch + "' in bit string");
    const std::uint64_t expected = n * (n > 0 ? n - 1 : 0) / 2;
    if (bits.size() != expected)
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(expected) + " bits for n=" + std::to_string(n) + ", got " +
                        std::to_string(bits.size()));

    const auto order = static_cast<Vertex>(n);
    std::vector<std::pair<Vertex, Vertex>> arcs;
    arcs.reserve(expected);
    std::size_t pos = 0;
    for (Vertex i = 0; i < order; ++i)
        for (Vertex j = i + 1; j < order; ++j)
            arcs.emplace_back(bits[pos++] == '1' ? std::pair{i, j} : std::pair{j, i});
    return Tournament::from_arcs(order, arcs);
}

} // namespace tourney
