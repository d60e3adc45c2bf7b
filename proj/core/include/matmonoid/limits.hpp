#pragma once

#include <cstdint>

namespace matmonoid {

/// Caps on brute-force enumeration. Counts are numbers of matrices (tree
/// rows) or candidate bit strings (collision search), not exponents.
struct EnumerationLimits {
    std::uint64_t tree_cells = std::uint64_t{1} << 20;
    std::uint64_t hash_strings = std::uint64_t{1} << 22;

    /// Defaults, with both caps replaced by MATMONOID_ENUM_LIMIT when that
    /// variable holds a positive decimal integer.
    static EnumerationLimits from_env();
};

} // namespace matmonoid
