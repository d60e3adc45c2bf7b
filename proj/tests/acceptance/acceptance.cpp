// Acceptance criteria 1-10. One PASS/FAIL line per criterion; exit status is
// the number of failures.

#include "matmonoid/error.hpp"
#include "matmonoid/extremal.hpp"
#include "matmonoid/hash.hpp"
#include "matmonoid/poly.hpp"
#include "matmonoid/tree.hpp"
#include "matmonoid/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <string>

using namespace matmonoid;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string why;
    void fail(std::string msg) {
        if (ok) why = std::move(msg);
        ok = false;
    }
};

int failures = 0;

void criterion(int id, char const* title, std::function<Outcome()> const& body) {
    auto const t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (std::exception const& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  (" << secs << " s)";
    if (!o.ok) std::cout << "  -- " << o.why;
    std::cout << std::endl;
    if (!o.ok) ++failures;
}

std::string uvn(std::uint64_t u, std::uint64_t v, std::uint64_t n) {
    return "u=" + std::to_string(u) + " v=" + std::to_string(v) + " n=" + std::to_string(n);
}

using Real = long double;

Real rel(Real approx, Natural const& exact) {
    Real const e = std::stold(exact.get_str());
    return std::fabs(approx - e) / e;
}

// The odd-depth table, cell by cell, typed in as printed.
Real table_odd(int u, int v, int n) {
    Real const k = n + 1;
    auto pw = [](Real b, Real e) { return std::pow(b, e); };
    Real const r5 = std::sqrt(5.0L), r3 = std::sqrt(3.0L), r21 = std::sqrt(21.0L), r2 = std::sqrt(2.0L),
               r15 = std::sqrt(15.0L), r13 = std::sqrt(13.0L);
    int const key = 10 * u + v;
    switch (key) {
    case 11: return (pw(3 + r5, k) - pw(3 - r5, k)) / (pw(2, k) * r5);
    case 12:
    case 21: return (pw(2 + r3, k) - pw(2 - r3, k)) / r3;
    case 13:
    case 31: return 3 * (pw(5 + r21, k) - pw(5 - r21, k)) / (pw(2, k) * r21);
    case 22: return (pw(3 + 2 * r2, k) - pw(3 - 2 * r2, k)) / (2 * r2);
    case 23:
    case 32: return 3 * (pw(4 + r15, k) - pw(4 - r15, k)) / (2 * r15);
    case 33: return (pw(11 + 3 * r13, k) - pw(11 - 3 * r13, k)) / (pw(2, k) * r13);
    }
    throw std::logic_error("no table entry");
}

// The even-depth table.
Real table_even(int u, int v, int n) {
    auto pw = [](Real b, Real e) { return std::pow(b, e); };
    Real const r5 = std::sqrt(5.0L), r3 = std::sqrt(3.0L), r2 = std::sqrt(2.0L);
    int const key = 10 * u + v;
    switch (key) {
    case 11: return ((r5 + 2) * pw(3 + r5, n) + (r5 - 2) * pw(3 - r5, n)) / (pw(2, n) * r5);
    case 12:
    case 21: return pw(2 + r3, n + 1) + pw(2 - r3, n + 1);
    case 22: return ((5 * r2 + 7) * pw(3 + 2 * r2, n) + (5 * r2 - 7) * pw(3 - 2 * r2, n)) / (2 * r2);
    }
    throw std::logic_error("no table entry");
}

Natural fib(std::uint64_t n) {
    Natural a = 0, b = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        Natural t = a + b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

int main() {
    criterion(1, "worked hash example 01100 -> [[0,1],[4,3]] mod 5", [] {
        Outcome o;
        Digest const d = hash_string(HashParams(2, 3, 5), "01100");
        if (!(d == Digest{0, 1, 4, 3}))
            o.fail("got [[" + d.a.get_str() + "," + d.b.get_str() + "],[" + d.c.get_str() + "," + d.d.get_str() + "]]");
        return o;
    });

    criterion(2, "odd-depth table, (u,v) in {1,2,3}^2, n=0..10; brute force to depth 15", [] {
        Outcome o;
        for (int u = 1; u <= 3; ++u)
            for (int v = 1; v <= 3; ++v)
                for (int n = 0; n <= 10; ++n) {
                    MonoidParams const p(u, v);
                    Natural const exact = mu_depth(p, 2 * n + 1);
                    if (rel(table_odd(u, v, n), exact) >= 1e-9) o.fail("table mismatch at " + uvn(u, v, n));
                    if (2 * n + 1 <= 15 && mu_row_bruteforce(p, 2 * n + 1) != exact)
                        o.fail("brute-force mismatch at " + uvn(u, v, n));
                }
        return o;
    });

    criterion(3, "even-depth table, (u,v) in {1,2}^2, n=0..10; brute force to depth 14", [] {
        Outcome o;
        for (int u = 1; u <= 2; ++u)
            for (int v = 1; v <= 2; ++v)
                for (int n = 0; n <= 10; ++n) {
                    MonoidParams const p(u, v);
                    Natural const exact = mu_depth(p, 2 * n + 2);
                    if (rel(table_even(u, v, n), exact) >= 1e-9) o.fail("table mismatch at " + uvn(u, v, n));
                    if (2 * n + 2 <= 14 && mu_row_bruteforce(p, 2 * n + 2) != exact)
                        o.fail("brute-force mismatch at " + uvn(u, v, n));
                }
        MonoidParams const p21(2, 1);
        if (mu_depth(p21, 2) != 4 || mu_depth(p21, 4) != 14 || mu_depth(p21, 6) != 52)
            o.fail("(2,1) even maxima are not 4, 14, 52");
        return o;
    });

    criterion(4, "mu_depth == brute force, (u,v) in [1..4]^2, n <= 16", [] {
        Outcome o;
        for (std::uint64_t u = 1; u <= 4; ++u)
            for (std::uint64_t v = 1; v <= 4; ++v)
                for (std::uint64_t n = 0; n <= 16; ++n) {
                    MonoidParams const p(u, v);
                    if (mu_depth(p, n) != mu_row_bruteforce(p, n)) o.fail(uvn(u, v, n));
                }
        return o;
    });

    criterion(5, "witness words attain mu_depth at the declared entry, (u,v) in [1..4]^2, 1 <= n <= 16", [] {
        Outcome o;
        for (std::uint64_t u = 1; u <= 4; ++u)
            for (std::uint64_t v = 1; v <= 4; ++v)
                for (std::uint64_t n = 1; n <= 16; ++n) {
                    MonoidParams const p(u, v);
                    try {
                        Witness const w = witness(p, n);
                        Natural const target = mu_depth(p, n);
                        if (w.word.depth() != n || word_to_matrix(w.word, p) != w.matrix ||
                            entry(w.matrix, w.position) != target || mu(w.matrix) != target)
                            o.fail(uvn(u, v, n));
                    } catch (WitnessMismatch const& e) {
                        o.fail(uvn(u, v, n) + ": " + e.what());
                    }
                }
        return o;
    });

    criterion(6, "u=v=1 gives mu_depth(n) = Fibonacci(n+1), n=0..20", [] {
        Outcome o;
        for (std::uint64_t n = 0; n <= 20; ++n)
            if (mu_depth(MonoidParams(1, 1), n) != fib(n + 1)) o.fail("n=" + std::to_string(n));
        // Pin the offset: 1, 1, 2, 3, 5, 8.
        if (mu_depth(MonoidParams(1, 1), 0) != 1 || mu_depth(MonoidParams(1, 1), 1) != 1 ||
            mu_depth(MonoidParams(1, 1), 5) != 8)
            o.fail("offset");
        return o;
    });

    criterion(7, "dominance order laws (10^4 pairs), evaluation implication, counterexample, F/G/H/I comparisons",
              [] {
                  Outcome o;
                  auto const rep = run_polydom_suite(kDefaultPolySamples, kDefaultPolySeed);
                  for (auto const& c : rep.checks)
                      if (!c.passed) o.fail(c.name + ": " + c.detail);
                  if (dominates(PolyN{1, 0, 0, 1}, PolyN{0, 1, 1})) o.fail("x^3+1 dominates x^2+x");
                  for (std::size_t n = 1; n <= 12; ++n) {
                      PolyN const F = f_poly(n), G = g_poly(n), H = h_poly(n), I = i_poly(n);
                      if (!dominates(G, H) || !dominates(H, I) || !dominates(F + G, H + I) ||
                          !dominates(g_poly(n + 1), Natural(2) * H.shifted(1) + I) ||
                          !dominates(h_poly(n + 1), F + Natural(2) * G) || F.shifted(1) + G != i_poly(n + 1))
                          o.fail("F/G/H/I comparison at n=" + std::to_string(n));
                  }
                  return o;
              });

    criterion(8, "antitranspose symmetry and half-row dominance, (u,v) in [1..3]^2, n <= 12", [] {
        Outcome o;
        for (std::uint64_t u = 1; u <= 3; ++u)
            for (std::uint64_t v = 1; v <= 3; ++v)
                for (std::size_t n = 0; n <= 12; ++n) {
                    MonoidParams const p(u, v);
                    auto const here = row(Mat2::identity(), p, n).cells;
                    auto const there = row(Mat2::identity(), p.swapped(), n).cells;
                    std::size_t const size = here.size();
                    for (std::size_t i = 0; i < size; ++i) {
                        Mat2 const& m = here[i];
                        Mat2 const& w = there[size - 1 - i];
                        if (!(m.a == w.d && m.b == w.c && m.c == w.b && m.d == w.a))
                            o.fail("antitranspose at " + uvn(u, v, n) + " i=" + std::to_string(i + 1));
                        // Left half dominates its mirror when u >= v; the right half does when u < v.
                        if (n >= 1 && i < size / 2) {
                            Natural const& left = mu(m);
                            Natural const& right = mu(here[size - 1 - i]);
                            if (u >= v ? right > left : left > right)
                                o.fail("half-row dominance at " + uvn(u, v, n) + " i=" + std::to_string(i + 1));
                        }
                    }
                }
        return o;
    });

    criterion(9, "no collisions up to n0 on the (u,v,p) grid; n0(2,3,101) = 4", [] {
        Outcome o;
        std::pair<std::uint64_t, std::uint64_t> const uv[] = {{1, 1}, {2, 3}, {3, 2}, {2, 2}};
        for (auto [u, v] : uv)
            for (unsigned long p : {101UL, 257UL, 1009UL}) {
                HashParams const hp(u, v, p);
                auto const n0 = bound_n0(hp);
                if (auto hit = exhaustive_collision_check(hp, n0))
                    o.fail(uvn(u, v, n0) + " p=" + std::to_string(p) + ": " + hit->first + " ~ " + hit->second);
            }
        if (bound_n0(HashParams(2, 3, 101)) != 4) o.fail("n0(2,3,101) != 4");
        return o;
    });

    // Finding the prime is not part of the timed work.
    Natural p = Natural(1) << 2047;
    p += Natural("123456789123456789123456789");
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    criterion(10, "2048-bit prime, (u,v)=(2,3): n0 in < 1 s with mu(n0) < p <= mu(n0+1)", [&p] {
        Outcome o;
        auto const t0 = Clock::now();
        HashParams const hp(2, 3, p);
        auto const n0 = bound_n0(hp);
        Natural const below = mu_depth(hp.monoid(), n0);
        Natural const above = mu_depth(hp.monoid(), n0 + 1);
        double const secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (mpz_sizeinbase(p.get_mpz_t(), 2) != 2048) o.fail("prime is not 2048 bits");
        if (!(below < p && p <= above)) o.fail("n0=" + std::to_string(n0) + " does not bracket p");
        if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
        return o;
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures;
}
