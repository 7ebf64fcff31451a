#ifndef TOURNEY_VERIFY_HPP
#define TOURNEY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tourney {

enum class Suite { Identities, Matrix, Acyclic, All };

/// "identities", "matrix", "acyclic" or "all"; throws BadParameter otherwise.
Suite parse_suite(std::string_view name);

struct PropertyResult {
    std::string name;
    std::int64_t checked = 0;  ///< instances examined (stops at the first failure)
    bool passed = true;
    std::string detail;        ///< what failed
    std::string counterexample; ///< serialized tournament, empty if none applies
};

struct VerifyReport {
    std::vector<PropertyResult> properties;

    bool passed() const;

    /// One line per property, plus a counterexample line for failures.
    std::string text() const;
};

/// Runs the named property suite on `cases` random tournaments drawn from a
/// SplitMix64 stream seeded with `seed`. Output depends only on the inputs.
VerifyReport verify(Suite suite, std::uint32_t cases, std::uint64_t seed);

} // namespace tourney

#endif
