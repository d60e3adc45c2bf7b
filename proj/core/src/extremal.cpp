#include "matmonoid/extremal.hpp"

#include "matmonoid/error.hpp"

#include <bit>
#include <stdexcept>

namespace matmonoid {

LucasPair lucas(Natural const& P, std::uint64_t m) {
    if (P < 3) throw std::invalid_argument("lucas requires P >= 3");
    // (V_k, V_{k+1}) with V_{2k} = V_k^2 - 2 and V_{2k+1} = V_k V_{k+1} - P (Q = 1).
    Natural vk = 2;
    Natural vk1 = P;
    for (int bit = std::bit_width(m) - 1; bit >= 0; --bit) {
        Natural const cross = vk * vk1 - P;
        if ((m >> bit) & 1U) {
            vk = cross;
            vk1 = vk1 * vk1 - 2;
        } else {
            vk = vk * vk - 2;
            vk1 = cross;
        }
    }
    // U_m = (2 V_{m+1} - P V_m) / (P^2 - 4)
    Natural u = 2 * vk1 - P * vk;
    mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), Natural(P * P - 4).get_mpz_t());
    return LucasPair{P, m, std::move(u), std::move(vk)};
}

AlphaGammaPair alpha_gamma(MonoidParams const& p, Natural const& a, Natural const& c, std::uint64_t n) {
    if (sgn(a) < 0 || sgn(c) < 0) throw std::invalid_argument("alpha_gamma: a and c must be nonnegative");
    if (sgn(a) == 0 && sgn(c) == 0) throw std::invalid_argument("alpha_gamma: a and c are both zero");
    Natural const u(p.u());
    Natural const v(p.v());
    Natural alpha = a;
    Natural gamma = u * a + c;
    for (std::uint64_t k = 0; k < n; ++k) {
        Natural next_alpha = alpha + v * gamma;
        gamma = u * alpha + (1 + u * v) * gamma;
        alpha = std::move(next_alpha);
    }
    return AlphaGammaPair{n, std::move(alpha), std::move(gamma)};
}

namespace {

Natural half_exact(Natural x) {
    if (sgn(x) < 0 || mpz_odd_p(x.get_mpz_t()))
        throw std::logic_error("even-depth maximum is not a nonnegative even integer before halving");
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 2);
    return x;
}

} // namespace

Natural mu_depth(MonoidParams const& p, std::uint64_t n) {
    if (n == 0) return 1;
    Natural const uv = Natural(p.u()) * p.v();
    Natural const t(p.t());
    Natural const P = 2 + uv;
    if (n % 2 == 1) return t * lucas(P, (n - 1) / 2 + 1).U;

    auto const lp = lucas(P, (n - 2) / 2 + 1);
    if (p.s() > 1) return half_exact(uv * lp.U + lp.V);
    // s = 1: (2 - t) can be negative; gmp integers are signed, the result is not.
    return half_exact(t * ((2 - t) * lp.U + lp.V));
}

Witness witness(MonoidParams const& p, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("witness requires depth n >= 1");
    Word const L = Word::parse("L");
    Word const R = Word::parse("R");
    Word const LR = Word::parse("LR");
    Word const RL = Word::parse("RL");
    bool const u_major = p.u() >= p.v();

    Witness w;
    if (n % 2 == 1) {
        std::uint64_t const k = (n - 1) / 2;
        w.word = u_major ? LR.repeat(k) + L : RL.repeat(k) + R;
        w.position = u_major ? EntryPos{2, 1} : EntryPos{1, 2};
        w.matrix = word_to_matrix(w.word, p);
    } else if (p.s() > 1) {
        std::uint64_t const k = (n - 2) / 2;
        w.word = RL.repeat(k + 1);
        w.matrix = word_to_matrix(w.word, p);
        Natural const& top = mu(w.matrix);
        w.position = w.matrix.a == top   ? EntryPos{1, 1}
                     : w.matrix.b == top ? EntryPos{1, 2}
                     : w.matrix.c == top ? EntryPos{2, 1}
                                         : EntryPos{2, 2};
    } else {
        std::uint64_t const k = (n - 2) / 2;
        w.word = u_major ? L + LR.repeat(k) + L : R + RL.repeat(k) + R;
        w.position = u_major ? EntryPos{2, 1} : EntryPos{1, 2};
        w.matrix = word_to_matrix(w.word, p);
    }

    Natural const expected = mu_depth(p, n);
    if (entry(w.matrix, w.position) != expected || mu(w.matrix) != expected)
        throw WitnessMismatch("witness " + w.word.str() + " does not attain the depth-" + std::to_string(n) +
                              " maximum " + expected.get_str());
    return w;
}

Natural fseq(MonoidParams const& p, std::uint64_t n) {
    if (n == 0) return 0;
    Natural prev = 0;
    Natural cur = 1;
    for (std::uint64_t k = 2; k <= n; ++k) {
        Natural next = (k % 2 == 1 ? p.u() : p.v()) * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::uint64_t collision_horizon(MonoidParams const& p, Natural const& bound) {
    if (bound < 2) throw std::invalid_argument("collision_horizon requires bound >= 2");
    // mu_depth is non-decreasing and mu_depth(0) = 1 < bound.
    std::uint64_t lo = 0;
    std::uint64_t hi = 1;
    while (mu_depth(p, hi) < bound) {
        lo = hi;
        hi *= 2;
    }
    // Invariant: mu(lo) < bound <= mu(hi).
    while (hi - lo > 1) {
        std::uint64_t const mid = lo + (hi - lo) / 2;
        if (mu_depth(p, mid) < bound)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace matmonoid
