#pragma once

// Matrix hash over SL2(F_p): bit 0 -> L_u, bit 1 -> R_v.
//
// A bit string a_1 ... a_k hashes to f(a_1) f(a_2) ... f(a_k) mod p, the
// empty string to I2. Strings of length <= bound_n0() never collide, since
// their exact products have all entries below p.

#include "matmonoid/limits.hpp"
#include "matmonoid/matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matmonoid {

/// Deterministic Miller-Rabin below 3.4e14, 64-round probabilistic above.
bool is_prime(Natural const& n);

class HashParams {
public:
    /// Throws InvalidParams if u or v is zero or p is not prime.
    HashParams(std::uint64_t u, std::uint64_t v, Natural p);

    std::uint64_t u() const noexcept { return u_; }
    std::uint64_t v() const noexcept { return v_; }
    Natural const& p() const noexcept { return p_; }
    MonoidParams monoid() const { return MonoidParams(u_, v_); }

    /// Bytes per serialized residue: the byte length of p - 1 (at least 1).
    std::size_t field_width() const noexcept { return width_; }

private:
    std::uint64_t u_;
    std::uint64_t v_;
    Natural p_;
    std::size_t width_;
};

/// Residues mod p, row-major.
struct Digest {
    Natural a, b, c, d;
    bool operator==(Digest const& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

/// Running product for one input stream. Not safe to share while updating.
class HashState {
public:
    explicit HashState(HashParams params);

    HashParams const& params() const noexcept { return params_; }
    std::uint64_t bits_consumed() const noexcept { return bits_; }
    Digest const& digest() const noexcept { return acc_; }

    /// acc <- acc * f(bit) mod p.
    HashState& update_bit(bool bit);
    /// ASCII '0'/'1'; whitespace is skipped, anything else throws std::invalid_argument.
    HashState& update_ascii(std::string_view bits);
    /// Raw bytes, most significant bit of each byte first.
    HashState& update_bytes(std::span<std::uint8_t const> bytes);

private:
    HashParams params_;
    Natural u_mod_;
    Natural v_mod_;
    Digest acc_{1, 0, 0, 1};
    std::uint64_t bits_ = 0;
};

HashState init(HashParams const& params);

/// One-shot hash of an ASCII bit string.
Digest hash_string(HashParams const& params, std::string_view bits);

/// mod-p determinant of a digest.
Natural det_mod(Digest const& d, Natural const& p);

/// Largest n such that every depth-n monoid element has all entries below p.
std::uint64_t bound_n0(HashParams const& params);

/// Enumerates all bit strings of length 0..max_len in shortlex order (by
/// length, then lexicographically) and returns the first pair (earlier,
/// later) whose digests agree, where "first" means the later string is as
/// early as possible. Throws LimitExceeded when 2^(max_len+1) exceeds
/// limits.hash_strings.
std::optional<std::pair<std::string, std::string>>
exhaustive_collision_check(HashParams const& params, std::size_t max_len, EnumerationLimits const& limits = {});

/// Four big-endian fields of field_width() bytes each, row-major.
std::vector<std::uint8_t> serialize(Digest const& d, HashParams const& params);
/// Inverse of serialize; throws std::invalid_argument on a length or range mismatch.
Digest parse_digest(std::span<std::uint8_t const> bytes, HashParams const& params);

std::string to_hex(std::span<std::uint8_t const> bytes);

} // namespace matmonoid
