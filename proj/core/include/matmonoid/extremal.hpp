#pragma once

// Largest entry over all depth-n elements of <L_u, R_v>.
//
// With P = 2 + uv, s = min(u,v), t = max(u,v) and the Lucas sequences
// U_m, V_m of x^2 - P x + 1, the row maxima of the I2 tree are
//
//     mu(0)      = 1
//     mu(2k + 1) = t U_{k+1}
//     mu(2k + 2) = (uv U_{k+1} + V_{k+1}) / 2              if s > 1
//                = t ((2 - t) U_{k+1} + V_{k+1}) / 2        if s = 1
//
// which are the integer forms of the radical closed forms in bigfloat.hpp
// / closed_form_float (the roots of x^2 - P x + 1 are q+/2 and q-/2 with
// q+- = 2 + uv +- sqrt(uv(4 + uv))). Everything here is exact; the radical
// forms exist only as a cross-check.

#include "matmonoid/bigfloat.hpp"
#include "matmonoid/matrix.hpp"

#include <cstdint>

namespace matmonoid {

struct LucasPair {
    Natural P;
    std::uint64_t m = 0;
    Natural U; ///< U_m, with U_0 = 0, U_1 = 1
    Natural V; ///< V_m, with V_0 = 2, V_1 = P
};

/// (U_m, V_m) for x^2 - P x + 1 by index doubling. Requires P >= 3.
LucasPair lucas(Natural const& P, std::uint64_t m);

struct AlphaGammaPair {
    std::uint64_t n = 0;
    Natural alpha;
    Natural gamma;
};

/// Left column (alpha_n, gamma_n) of (L_u R_v)^n L_u M where M has left
/// column (a, c):
///   alpha_0 = a,  gamma_0 = ua + c,
///   alpha_n = alpha_{n-1} + v gamma_{n-1},
///   gamma_n = u alpha_{n-1} + (1 + uv) gamma_{n-1}.
/// a and c must not both be zero.
AlphaGammaPair alpha_gamma(MonoidParams const& p, Natural const& a, Natural const& c, std::uint64_t n);

enum class Parity { Odd, Even };

/// Constants of the two-term eigen expansion of (alpha_n, gamma_n).
struct ClosedFormParams {
    BigFloat p_plus, p_minus; ///< +-v sqrt(u) + sqrt(v(4 + uv))
    BigFloat q_plus, q_minus; ///< 2 + uv +- sqrt(uv(4 + uv))
    BigFloat lambda1, lambda2; ///< q+- / 2
    BigFloat c1, c2;          ///< coordinates of (alpha_0, gamma_0) in the eigenbasis
};

ClosedFormParams closed_form_params(MonoidParams const& p, Natural const& a, Natural const& c);

/// gamma_n and alpha_n from the eigen expansion, for cross-checking alpha_gamma.
BigFloat gamma_closed_form(MonoidParams const& p, Natural const& a, Natural const& c, std::uint64_t n);
BigFloat alpha_closed_form(MonoidParams const& p, Natural const& a, Natural const& c, std::uint64_t n);

/// Radical closed form of the row maximum at depth 2n+1 (Odd) or 2n+2
/// (Even), evaluated at kClosedFormPrecision bits.
BigFloat closed_form_float(MonoidParams const& p, std::uint64_t n, Parity parity);

/// Exact maximum entry over the depth-n row of the I2 tree. O(log n).
Natural mu_depth(MonoidParams const& p, std::uint64_t n);

struct Witness {
    Word word;
    Mat2 matrix;
    EntryPos position;
};

/// A word of depth n whose matrix attains mu_depth(p, n), and the entry that
/// attains it:
///   n = 2k+1:          (LR)^k L at (2,1) if u >= v, else (RL)^k R at (1,2)
///   n = 2k+2, s > 1:   (RL)^(k+1), first maximal entry in row-major order
///   n = 2k+2, s = 1:   L(LR)^k L at (2,1) if u >= v, else R(RL)^k R at (1,2)
/// Requires n >= 1. Throws WitnessMismatch if the constructed matrix does not
/// attain the exact maximum.
Witness witness(MonoidParams const& p, std::uint64_t n);

/// F_0 = 0, F_1 = 1, F_n = u F_{n-1} + F_{n-2} (n odd), v F_{n-1} + F_{n-2} (n even).
Natural fseq(MonoidParams const& p, std::uint64_t n);

/// Largest n with mu_depth(p, n) < bound. Requires bound >= 2.
std::uint64_t collision_horizon(MonoidParams const& p, Natural const& bound);

} // namespace matmonoid
