#pragma once

// Property suites behind `matmonoid verify`.
//
// Grids (fixed, so reports are reproducible):
//   formulas  (u,v) in [1..4]^2, depth 0..max_depth (default 16) against the
//             brute-force row maximum; closed forms over (u,v) in [1..3]^2,
//             n = 0..10, relative error < 1e-9.
//   symmetry  (u,v) in [1..3]^2, depth 1..max_depth (default 12); symbolic
//             checks on every word of depth <= 10; odd-depth column bound on
//             (u,v) in [1..4]^2, depth 2n+1 <= 15.
//   polydom   10^4 seeded random polynomial pairs, r = 1..10, n = 1..12
//             for the F/G/H/I comparisons, n <= 20 for closed forms.
//   hash      (u,v) in {(1,1),(2,3),(3,2),(2,2)} x p in {101,257,1009}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matmonoid {

struct CheckResult {
    std::string name;
    std::string range;
    bool passed = true;
    std::string detail; ///< first counterexample when failed
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

inline constexpr std::size_t kDefaultFormulasDepth = 16;
inline constexpr std::size_t kDefaultSymmetryDepth = 12;
inline constexpr std::size_t kDefaultPolySamples = 10000;
inline constexpr std::uint64_t kDefaultPolySeed = 0x5eedf00dULL;

SuiteReport run_formulas_suite(std::size_t max_depth = kDefaultFormulasDepth);
SuiteReport run_symmetry_suite(std::size_t max_depth = kDefaultSymmetryDepth);
SuiteReport run_polydom_suite(std::size_t samples = kDefaultPolySamples, std::uint64_t seed = kDefaultPolySeed);
SuiteReport run_hash_suite();

/// suite is one of formulas, symmetry, polydom, hash, all. max_depth applies
/// to formulas and symmetry. Throws std::invalid_argument on an unknown name.
std::vector<SuiteReport> run_suites(std::string_view suite, std::optional<std::size_t> max_depth = {});

/// Fixed-width PASS/FAIL table.
std::string format_report(std::vector<SuiteReport> const& reports);

} // namespace matmonoid
