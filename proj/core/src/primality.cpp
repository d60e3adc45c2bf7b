#include "matmonoid/hash.hpp"

namespace matmonoid {

namespace {

// Bases 2..17 are a complete witness set for n < 341,550,071,728,321.
constexpr unsigned long kSmallBases[] = {2, 3, 5, 7, 11, 13, 17};
Natural const kDeterministicBound("341550071728321");

bool miller_rabin(Natural const& n, unsigned long base) {
    Natural d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    Natural x;
    Natural const b(base);
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Natural const minus_one = n - 1;
    if (x == 1 || x == minus_one) return true;
    for (unsigned long r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == minus_one) return true;
    }
    return false;
}

} // namespace

bool is_prime(Natural const& n) {
    if (n < 2) return false;
    for (unsigned long b : kSmallBases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    if (n < kDeterministicBound) {
        for (unsigned long b : kSmallBases)
            if (!miller_rabin(n, b)) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

} // namespace matmonoid
