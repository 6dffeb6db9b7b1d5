#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plyalg {

// Outcome of one verification suite. Failures are self-contained JSON objects
// (one per failing instance) so reports are machine-readable and stable.
struct SuiteReport {
    std::string suite;
    std::size_t total = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Relation instances PLY1..PLY6 over basis elements (total vertices <= max):
// normal form must be 0 and the trace must verify. samples == 0 means every
// instance, otherwise `samples` seeded draws per relation.
SuiteReport check_ply_suite(unsigned max_vertices, unsigned samples, std::uint64_t seed, unsigned alphabet_size);

// LY1..LY6 residuals and the bracket-free degeneration identities.
SuiteReport check_ly_suite(unsigned max_vertices, unsigned samples, std::uint64_t seed, unsigned alphabet_size);

// LTS Hall rewriting on ternary bracketings with foliage length <= max_leaves:
// Hall-only output, idempotence, and annihilation of skew-symmetry, cyclic
// and derivation instances. samples == 0 means every bracketing.
SuiteReport check_lts_hall_suite(unsigned max_leaves, unsigned samples, std::uint64_t seed, unsigned letters);

// expand o decompose and decompose o expand are identities on words and OSBB
// words of length <= max_length; letters are conserved.
SuiteReport check_osbb_suite(unsigned max_length, unsigned letters);

// Sizes of the enumerated bases against the counting formulas, and of the
// PLY basis against the known dimensions for one generator.
SuiteReport check_census_suite(unsigned max_n, unsigned alphabet_size);

// {"suite":..,"total":..,"failed":..,"failures":[..]}
std::string report_json(const SuiteReport& r);

} // namespace plyalg
