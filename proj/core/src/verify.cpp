#include "matmonoid/verify.hpp"

#include "matmonoid/error.hpp"
#include "matmonoid/extremal.hpp"
#include "matmonoid/hash.hpp"
#include "matmonoid/poly.hpp"
#include "matmonoid/tree.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace matmonoid {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
}

namespace {

class Check {
public:
    Check(std::string name, std::string range) : r_{std::move(name), std::move(range), true, {}} {}

    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.detail = describe();
        }
    }

    bool ok() const { return r_.passed; }
    CheckResult done() && { return std::move(r_); }

private:
    CheckResult r_;
};

std::string uvn(std::uint64_t u, std::uint64_t v, std::uint64_t n) {
    return "u=" + std::to_string(u) + " v=" + std::to_string(v) + " n=" + std::to_string(n);
}

std::string str(Mat2 const& m) {
    return "[[" + m.a.get_str() + "," + m.b.get_str() + "],[" + m.c.get_str() + "," + m.d.get_str() + "]]";
}

std::string depths(char const* grid, std::size_t lo, std::size_t hi) {
    return std::string(grid) + ", n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

Natural fibonacci(std::size_t n) {
    Natural a = 0, b = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Natural next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

} // namespace

SuiteReport run_formulas_suite(std::size_t max_depth) {
    SuiteReport rep{"formulas", {}};

    Check oracle("mu_depth == brute-force row maximum", depths("(u,v) in [1..4]^2", 0, max_depth));
    Check wit("witness attains mu_depth", depths("(u,v) in [1..4]^2", 0, max_depth));
    Check sym("mu_depth(u,v,n) == mu_depth(v,u,n)", depths("(u,v) in [1..4]^2", 0, max_depth));
    Check mono("mu_depth strictly increasing for n >= 1", depths("(u,v) in [1..4]^2", 0, max_depth));
    Check flink("fseq(s,t,n+1) == mu_depth(n) when s>1 or u=v=1", depths("(u,v) in [1..4]^2", 0, max_depth));
    for (std::uint64_t u = 1; u <= 4; ++u) {
        for (std::uint64_t v = 1; v <= 4; ++v) {
            MonoidParams const p(u, v);
            MonoidParams const oriented(p.s(), p.t());
            Natural prev = 0;
            for (std::size_t n = 0; n <= max_depth; ++n) {
                Natural const exact = mu_depth(p, n);
                Natural const brute = mu_row_bruteforce(p, n);
                oracle.expect(exact == brute, [&] {
                    return uvn(u, v, n) + ": " + exact.get_str() + " vs brute " + brute.get_str();
                });
                if (n >= 1) {
                    try {
                        auto const w = witness(p, n);
                        wit.expect(entry(w.matrix, w.position) == exact, [&] { return uvn(u, v, n); });
                    } catch (WitnessMismatch const& e) {
                        wit.expect(false, [&] { return uvn(u, v, n) + ": " + e.what(); });
                    }
                    mono.expect(exact > prev || (n == 1 && exact == prev),
                                [&] { return uvn(u, v, n); });
                }
                sym.expect(exact == mu_depth(p.swapped(), n), [&] { return uvn(u, v, n); });
                if (p.s() > 1 || (u == 1 && v == 1))
                    flink.expect(fseq(oriented, n + 1) == exact, [&] { return uvn(u, v, n); });
                prev = exact;
            }
        }
    }

    Check closed("closed forms agree to rel. error < 1e-9", "(u,v) in [1..3]^2, n=0..10, both parities");
    for (std::uint64_t u = 1; u <= 3; ++u) {
        for (std::uint64_t v = 1; v <= 3; ++v) {
            MonoidParams const p(u, v);
            for (std::uint64_t n = 0; n <= 10; ++n) {
                double const odd = relative_error(closed_form_float(p, n, Parity::Odd), mu_depth(p, 2 * n + 1));
                double const even = relative_error(closed_form_float(p, n, Parity::Even), mu_depth(p, 2 * n + 2));
                closed.expect(odd < 1e-9 && even < 1e-9, [&] {
                    return uvn(u, v, n) + ": odd " + std::to_string(odd) + ", even " + std::to_string(even);
                });
            }
        }
    }

    Check system("alpha/gamma recurrence == left column of (LR)^n L, eigen form rel. < 1e-9",
                 "(u,v) in [1..4]^2, n=0..10");
    for (std::uint64_t u = 1; u <= 4; ++u) {
        for (std::uint64_t v = 1; v <= 4; ++v) {
            MonoidParams const p(u, v);
            for (std::uint64_t n = 0; n <= 10; ++n) {
                auto const ag = alpha_gamma(p, 1, 0, n);
                Mat2 const m = word_to_matrix(Word::parse("LR").repeat(n) + Word::parse("L"), p);
                system.expect(ag.alpha == m.a && ag.gamma == m.c && ag.gamma >= ag.alpha,
                              [&] { return uvn(u, v, n) + ": column " + str(m); });
                double const eg = relative_error(gamma_closed_form(p, 1, 0, n), ag.gamma);
                double const ea = relative_error(alpha_closed_form(p, 1, 0, n), ag.alpha);
                system.expect(eg < 1e-9 && ea < 1e-9, [&] { return uvn(u, v, n) + ": eigen form drift"; });
            }
        }
    }

    Check fib("u=v=1 row maxima are Fibonacci F(n+1)", "n=0..20");
    for (std::size_t n = 0; n <= 20; ++n)
        fib.expect(mu_depth(MonoidParams(1, 1), n) == fibonacci(n + 1), [&] { return "n=" + std::to_string(n); });

    for (Check* c : {&oracle, &wit, &sym, &mono, &flink, &closed, &system, &fib})
        rep.checks.push_back(std::move(*c).done());
    return rep;
}

SuiteReport run_symmetry_suite(std::size_t max_depth) {
    SuiteReport rep{"symmetry", {}};

    Check uvvu("c(u,v)(n,i) == antitranspose c(v,u)(n,2^n+1-i)", depths("(u,v) in [1..3]^2", 1, max_depth));
    Check left("half-row dominance: mu(c(n,2^n+1-i)) <= mu(c(n,i)), i <= 2^(n-1), u >= v (mirrored for u < v)",
               depths("(u,v) in [1..3]^2", 1, max_depth));
    Check cols("mu is the left column max under L_u, the right column max under R_v",
               depths("(u,v) in [1..3]^2", 1, max_depth));
    Check cls("every vertex of depth >= 1 is u-lower- or v-upper-dominant",
              depths("(u,v) in [1..3]^2", 1, max_depth));
    for (std::uint64_t u = 1; u <= 3; ++u) {
        for (std::uint64_t v = 1; v <= 3; ++v) {
            MonoidParams const p(u, v);
            for (std::size_t n = 1; n <= max_depth; ++n) {
                auto const r = row(Mat2::identity(), p, n);
                std::uint64_t const size = r.cells.size();
                for (std::uint64_t i = 1; i <= size; ++i) {
                    Mat2 const& m = r.cells[i - 1];
                    Mat2 const mirror = cell(n, size + 1 - i, p.swapped());
                    uvvu.expect(m == antitranspose(mirror), [&] { return uvn(u, v, n) + " i=" + std::to_string(i); });

                    Natural const& mm = mu(m);
                    if (i <= size / 2) {
                        Natural const col = std::max(m.a, m.c);
                        cols.expect(mm == col, [&] { return uvn(u, v, n) + " i=" + std::to_string(i); });
                        Natural const& other = mu(r.cells[size - i]);
                        bool const ok = u >= v ? other <= mm : mm <= other;
                        left.expect(ok, [&] { return uvn(u, v, n) + " i=" + std::to_string(i); });
                    } else {
                        Natural const col = std::max(m.b, m.d);
                        cols.expect(mm == col, [&] { return uvn(u, v, n) + " i=" + std::to_string(i); });
                    }
                    cls.expect(classify(m, p) != DominanceClass::Neither,
                               [&] { return uvn(u, v, n) + " i=" + std::to_string(i); });
                }
            }
        }
    }

    std::size_t const sym_depth = std::min<std::size_t>(max_depth, 10);
    Check flip_check("entry polys: flip(c(n,i)) == c(n,2^n+1-i)", depths("every word", 0, sym_depth));
    Check structure("entry polys: f1,f4 balanced; f2 = Y*balanced; f3 = X*balanced; deg <= n",
                    depths("every word", 0, sym_depth));
    for (std::size_t n = 0; n <= sym_depth; ++n) {
        std::uint64_t const size = std::uint64_t{1} << n;
        for (std::uint64_t i = 1; i <= size; ++i) {
            BiMat2 const f = entry_polys(cell_word(n, i));
            structure.expect(f[0].has_offset_balance(0, 0) && f[1].has_offset_balance(0, 1) &&
                                 f[2].has_offset_balance(1, 0) && f[3].has_offset_balance(0, 0),
                             [&] { return "n=" + std::to_string(n) + " i=" + std::to_string(i); });
            for (auto const& fi : f)
                structure.expect(fi.total_degree() <= n, [&] { return "degree at n=" + std::to_string(n); });
            if (n >= 1)
                flip_check.expect(flip(f) == entry_polys(cell_word(n, size + 1 - i)),
                                  [&] { return "n=" + std::to_string(n) + " i=" + std::to_string(i); });
        }
    }

    Check bound("depth 2n+1 left column <= gamma_n, attained (u >= v; top row vs (v,u) otherwise)",
                "(u,v) in [1..4]^2, n=0..7");
    for (std::uint64_t u = 1; u <= 4; ++u) {
        for (std::uint64_t v = 1; v <= 4; ++v) {
            MonoidParams const p(u, v);
            MonoidParams const major(p.t(), p.s());
            for (std::size_t n = 0; n <= 7; ++n) {
                Natural const gamma = alpha_gamma(major, 1, 0, n).gamma;
                auto const r = row(Mat2::identity(), p, 2 * n + 1);
                Natural best = 0;
                for (auto const& m : r.cells) {
                    Natural const x = u >= v ? std::max(m.a, m.c) : std::max(m.a, m.b);
                    if (x > best) best = x;
                }
                bound.expect(best == gamma, [&] {
                    return uvn(u, v, n) + ": max " + best.get_str() + " vs gamma " + gamma.get_str();
                });
            }
        }
    }

    for (Check* c : {&uvvu, &left, &cols, &cls, &flip_check, &structure, &bound})
        rep.checks.push_back(std::move(*c).done());
    return rep;
}

namespace {

PolyN random_poly(std::mt19937_64& rng, std::size_t max_degree, unsigned max_coeff) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::uniform_int_distribution<unsigned> coef(0, max_coeff);
    std::vector<Natural> c(deg(rng) + 1);
    for (auto& x : c) x = coef(rng);
    return PolyN(std::move(c));
}

// A polynomial dominating g: g plus random extra mass, with some of g's own
// mass pushed to higher degrees.
PolyN random_dominator(std::mt19937_64& rng, PolyN const& g) {
    std::vector<Natural> c = g.coeffs();
    c.resize(c.size() + 3, Natural(0));
    std::uniform_int_distribution<std::size_t> pos(0, c.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int moves = 0; moves < 4; ++moves) {
        std::size_t const from = pos(rng);
        std::size_t const to = pos(rng);
        if (from < to && sgn(c[from]) > 0) {
            c[from] -= 1;
            c[to] += 1;
        }
        if (coin(rng)) c[pos(rng)] += 1;
    }
    return PolyN(std::move(c));
}

} // namespace

SuiteReport run_polydom_suite(std::size_t samples, std::uint64_t seed) {
    SuiteReport rep{"polydom", {}};
    std::mt19937_64 rng(seed);
    std::string const sampled = std::to_string(samples) + " seeded random pairs";

    Check laws("partial order: reflexive, antisymmetric, transitive", sampled);
    Check props("f>=g => deg f >= deg g; additivity; x^i f >= x^j f; coefficientwise => dominance", sampled);
    Check domineq("f >= g => f(r) >= g(r)", sampled + ", r=1..10");
    std::size_t dominating = 0;
    for (std::size_t k = 0; k < samples; ++k) {
        PolyN const f = random_poly(rng, 8, 4);
        PolyN const g = (k % 2 == 0) ? random_poly(rng, 8, 4) : random_dominator(rng, f);
        PolyN const h = random_dominator(rng, random_dominator(rng, g));
        // In odd rounds g dominates f by construction, so swap roles to get f >= g pairs.
        PolyN const& hi = (k % 2 == 0) ? f : g;
        PolyN const& lo = (k % 2 == 0) ? g : f;

        laws.expect(dominates(f, f), [&] { return "reflexivity fails for " + f.str(); });
        laws.expect(!(dominates(f, g) && dominates(g, f)) || f == g,
                    [&] { return "antisymmetry fails for " + f.str() + " / " + g.str(); });
        // g <= h by construction; check f >= h => f >= g style chains both ways
        if (dominates(h, g) && dominates(g, f))
            laws.expect(dominates(h, f), [&] { return "transitivity fails"; });

        if (dominates(hi, lo)) {
            ++dominating;
            props.expect(hi.degree() >= lo.degree() || lo.is_zero(), [&] { return "degree: " + hi.str(); });
            props.expect(dominates(hi + h, lo + g) || !dominates(h, g), [&] { return "additivity"; });
            for (unsigned long r = 1; r <= 10; ++r)
                domineq.expect(eval(hi, Natural(r)) >= eval(lo, Natural(r)),
                               [&] { return hi.str() + " vs " + lo.str() + " at r=" + std::to_string(r); });
        }
        props.expect(dominates(f.shifted(3), f.shifted(1)) && dominates(f + g, g),
                     [&] { return "shift or sum property fails for " + f.str(); });
    }
    props.expect(dominating > samples / 4, [&] { return "too few dominating pairs sampled"; });

    Check counter("x^3+1 does not dominate x^2+x although pointwise >= on r=1..10", "fixed pair");
    PolyN const cx{1, 0, 0, 1};
    PolyN const cy{0, 1, 1};
    counter.expect(!dominates(cx, cy), [] { return "dominates() returned true"; });
    for (unsigned long r = 1; r <= 10; ++r)
        counter.expect(eval(cx, Natural(r)) >= eval(cy, Natural(r)), [] { return "pointwise comparison"; });

    Check sim("I_n <= H_n <= G_n and H_n + I_n <= F_n + G_n", "n=1..12");
    Check sim2("2xH_n + I_n <= G_{n+1}, F_n + 2G_n <= H_{n+1}, xF_n + G_n == I_{n+1}", "n=1..12");
    for (std::size_t n = 1; n <= 12; ++n) {
        PolyN const F = f_poly(n), G = g_poly(n), H = h_poly(n), I = i_poly(n);
        auto const tag = [&] { return "n=" + std::to_string(n); };
        sim.expect(dominates(G, H) && dominates(H, I) && dominates(F + G, H + I), tag);
        sim2.expect(dominates(g_poly(n + 1), Natural(2) * H.shifted(1) + I), tag);
        sim2.expect(dominates(h_poly(n + 1), F + Natural(2) * G), tag);
        sim2.expect(F.shifted(1) + G == i_poly(n + 1), tag);
    }

    Check closed("binomial closed forms == recurrence builds (F,G,H,I)", "n<=20");
    for (std::size_t n = 0; n <= 20; ++n) {
        auto const [F, G] = fg_by_recurrence(n);
        closed.expect(F == f_poly(n) && G == g_poly(n), [&] { return "F/G n=" + std::to_string(n); });
        if (n >= 1) {
            auto const [H, I] = hi_by_recurrence(n);
            closed.expect(H == h_poly(n) && I == i_poly(n), [&] { return "H/I n=" + std::to_string(n); });
        }
    }

    Check matrix("left column of (LR)^n L is (F_n,G_n), of (RL)^n L is (H_n,I_n); values at u=1..5, v=1",
                 "n=0..12");
    for (std::size_t n = 0; n <= 12; ++n) {
        Word const wfg = Word::parse("LR").repeat(n) + Word::parse("L");
        auto const [f, g] = left_column_polys(wfg);
        matrix.expect(f == f_poly(n) && g == g_poly(n), [&] { return "F/G n=" + std::to_string(n); });
        if (n >= 1) {
            Word const whi = Word::parse("RL").repeat(n) + Word::parse("L");
            auto const [h, i] = left_column_polys(whi);
            matrix.expect(h == h_poly(n) && i == i_poly(n), [&] { return "H/I n=" + std::to_string(n); });
        }
        for (std::uint64_t u = 1; u <= 5; ++u) {
            Mat2 const m = word_to_matrix(wfg, MonoidParams(u, 1));
            matrix.expect(eval(f, Natural(u)) == m.a && eval(g, Natural(u)) == m.c,
                          [&] { return "evaluation n=" + std::to_string(n) + " u=" + std::to_string(u); });
        }
    }

    Check fibpoly("F_n(x^2) == Fibonacci polynomial of index 2n+1", "n=0..12");
    for (std::size_t n = 0; n <= 12; ++n)
        fibpoly.expect(f_poly(n).substitute_square() == fibonacci_poly(2 * n + 1),
                       [&] { return "n=" + std::to_string(n); });

    Check pascal("Pascal merge identity", "a=1..10, b=2a-2..2a+6");
    for (std::size_t a = 1; a <= 10; ++a)
        for (std::size_t b = 2 * a - 2; b <= 2 * a + 6; ++b)
            pascal.expect(pascal_merge_check(a, b),
                          [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b); });

    for (Check* c : {&laws, &props, &domineq, &counter, &sim, &sim2, &closed, &matrix, &fibpoly, &pascal})
        rep.checks.push_back(std::move(*c).done());
    return rep;
}

SuiteReport run_hash_suite() {
    SuiteReport rep{"hash", {}};

    Check example("(u,v,p) = (2,3,5): 01100 -> [[0,1],[4,3]]", "fixed input");
    {
        HashParams const hp(2, 3, 5);
        example.expect(hash_string(hp, "01100") == Digest{0, 1, 4, 3}, [] { return "digest differs"; });
    }

    Check no_collision("no collisions among strings of length <= n0",
                    "(u,v) in {(1,1),(2,3),(3,2),(2,2)}, p in {101,257,1009}");
    Check horizon("mu(n0) < p <= mu(n0+1)", "same grid");
    std::pair<std::uint64_t, std::uint64_t> const pairs[] = {{1, 1}, {2, 3}, {3, 2}, {2, 2}};
    for (auto [u, v] : pairs) {
        for (unsigned long prime : {101UL, 257UL, 1009UL}) {
            HashParams const hp(u, v, prime);
            std::uint64_t const n0 = bound_n0(hp);
            auto const hit = exhaustive_collision_check(hp, n0);
            no_collision.expect(!hit.has_value(), [&] {
                return uvn(u, v, n0) + " p=" + std::to_string(prime) + ": " + hit->first + " vs " + hit->second;
            });
            horizon.expect(mu_depth(hp.monoid(), n0) < prime && mu_depth(hp.monoid(), n0 + 1) >= prime,
                           [&] { return uvn(u, v, n0) + " p=" + std::to_string(prime); });
        }
    }

    Check pinned("n0(2,3,101) == 4", "fixed");
    pinned.expect(bound_n0(HashParams(2, 3, 101)) == 4, [] { return "n0 differs"; });

    Check det("det(acc) == 1 mod p after every update", "(2,3,1009), 200 seeded strings of length <= 64");
    Check stream("chunked ASCII updates == one-shot digest", "same strings, every split point");
    std::mt19937_64 rng(kDefaultPolySeed);
    HashParams const hp(2, 3, 1009);
    for (int k = 0; k < 200; ++k) {
        std::uniform_int_distribution<int> len(0, 64), bit(0, 1);
        std::string s(static_cast<std::size_t>(len(rng)), '0');
        for (auto& ch : s) ch = bit(rng) ? '1' : '0';
        HashState st(hp);
        for (char ch : s) {
            st.update_bit(ch == '1');
            det.expect(det_mod(st.digest(), hp.p()) == 1, [&] { return "string " + s; });
        }
        Digest const whole = hash_string(hp, s);
        for (std::size_t cut = 0; cut <= s.size(); ++cut) {
            HashState split(hp);
            split.update_ascii(std::string_view(s).substr(0, cut));
            split.update_ascii(std::string_view(s).substr(cut));
            stream.expect(split.digest() == whole, [&] { return s + " split at " + std::to_string(cut); });
        }
    }

    Check exact("digest == exact product when p > mu(T;16)", "(2,3), all strings of length <= 16");
    {
        MonoidParams const mp(2, 3);
        Natural p = mu_depth(mp, 16);
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        HashParams const big(2, 3, p);
        for (std::size_t len = 0; len <= 16 && exact.ok(); ++len) {
            for (std::uint64_t j = 0; j < (std::uint64_t{1} << len); ++j) {
                std::string s(len, '0');
                Word w;
                for (std::size_t b = 0; b < len; ++b) {
                    bool const one = (j >> (len - 1 - b)) & 1U;
                    s[b] = one ? '1' : '0';
                    w.push_back(one ? Letter::R : Letter::L);
                }
                Mat2 const m = word_to_matrix(w, mp);
                Digest const d = hash_string(big, s);
                exact.expect(d.a == m.a && d.b == m.b && d.c == m.c && d.d == m.d, [&] { return s; });
            }
        }
    }

    for (Check* c : {&example, &no_collision, &horizon, &pinned, &det, &stream, &exact})
        rep.checks.push_back(std::move(*c).done());
    return rep;
}

std::vector<SuiteReport> run_suites(std::string_view suite, std::optional<std::size_t> max_depth) {
    std::vector<SuiteReport> out;
    bool const all = suite == "all";
    if (!all && suite != "formulas" && suite != "symmetry" && suite != "polydom" && suite != "hash")
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    if (all || suite == "formulas") out.push_back(run_formulas_suite(max_depth.value_or(kDefaultFormulasDepth)));
    if (all || suite == "symmetry") out.push_back(run_symmetry_suite(max_depth.value_or(kDefaultSymmetryDepth)));
    if (all || suite == "polydom") out.push_back(run_polydom_suite());
    if (all || suite == "hash") out.push_back(run_hash_suite());
    return out;
}

std::string format_report(std::vector<SuiteReport> const& reports) {
    std::ostringstream os;
    for (auto const& rep : reports) {
        os << "[" << rep.suite << "]\n";
        for (auto const& c : rep.checks) {
            os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  {" << c.range << "}";
            if (!c.passed) os << "\n        counterexample: " << c.detail;
            os << '\n';
        }
    }
    bool const ok = std::all_of(reports.begin(), reports.end(), [](auto const& r) { return r.passed(); });
    os << (ok ? "all checks passed" : "FAILURES present") << '\n';
    return os.str();
}

} // namespace matmonoid
