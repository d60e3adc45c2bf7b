#pragma once

// Polynomials over the naturals and the suffix-sum dominance order.
//
// f dominates g (written f >= g below) when every coefficient tail of f
// weakly exceeds the matching tail of g:
//
//     sum_{k >= N} [f]_k  >=  sum_{k >= N} [g]_k    for all N >= 0.
//
// Dominance implies f(r) >= g(r) for every positive integer r, but not
// conversely (x^3 + 1 vs x^2 + x).
//
// The F/G and H/I families are the left columns of (L_u R_1)^n L_u and
// (R_1 L_u)^n L_u as polynomials in u. Each family has a binomial closed
// form and a recurrence build; the two are kept as separate routes.

#include "matmonoid/matrix.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace matmonoid {

/// Univariate polynomial with natural coefficients; coeffs()[i] is [f]_i.
class PolyN {
public:
    PolyN() = default;
    /// Trailing zeros are stripped; negative coefficients throw.
    explicit PolyN(std::vector<Natural> coeffs);
    PolyN(std::initializer_list<unsigned long> coeffs);

    static PolyN monomial(Natural coeff, std::size_t exponent);
    static PolyN constant(Natural c) { return monomial(std::move(c), 0); }
    /// The polynomial x.
    static PolyN x() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; the zero polynomial reports 0.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    /// [f]_i, zero past the degree.
    Natural coeff(std::size_t i) const;
    std::vector<Natural> const& coeffs() const noexcept { return coeffs_; }

    PolyN& operator+=(PolyN const& g);
    friend PolyN operator+(PolyN f, PolyN const& g) { return f += g; }
    friend PolyN operator*(Natural const& k, PolyN f);
    friend PolyN operator*(PolyN const& f, PolyN const& g);

    /// Multiplication by x^k.
    PolyN shifted(std::size_t k) const;
    /// f(x^2).
    PolyN substitute_square() const;

    bool operator==(PolyN const&) const = default;

    /// Human-readable form, highest power first, e.g. "2x^2 + 3x + 1".
    std::string str() const;

private:
    void normalize();
    std::vector<Natural> coeffs_;
};

/// True iff f dominates g in the suffix-sum order.
bool dominates(PolyN const& f, PolyN const& g);

/// Exact evaluation at a natural point.
Natural eval(PolyN const& f, Natural const& r);

/// Pascal's triangle rows 0..nmax, built additively.
class BinomialTable {
public:
    explicit BinomialTable(std::size_t nmax);
    /// C(n, k), with the convention C(n, k) = 0 outside 0 <= k <= n and for n < 0.
    Natural const& operator()(long n, long k) const;

private:
    std::vector<std::vector<Natural>> rows_;
    Natural zero_{0};
};

/// Binomial closed forms. f_poly/g_poly accept n >= 0; h_poly/i_poly require
/// n >= 1 and throw std::invalid_argument otherwise.
PolyN f_poly(std::size_t n);
PolyN g_poly(std::size_t n);
PolyN h_poly(std::size_t n);
PolyN i_poly(std::size_t n);

/// Recurrence builds: F0 = 1, G0 = x, F_{n+1} = F_n + G_n, G_{n+1} = x F_{n+1} + G_n.
std::pair<PolyN, PolyN> fg_by_recurrence(std::size_t n);
/// H1 = 2x + 1, I1 = 2x, H_{n+1} = (1+x) H_n + I_n, I_{n+1} = x H_n + I_n. n >= 1.
std::pair<PolyN, PolyN> hi_by_recurrence(std::size_t n);

/// Left column of word_to_matrix(w) at v = 1 as polynomials in x = u.
std::pair<PolyN, PolyN> left_column_polys(Word const& w);

/// Checks the Pascal-rule merge identity
///   sum_{i<a} C(b-i,i) x^{a-i} + sum_{i<=a} C(b+1-i,i) x^{a+1-i}
///     = sum_{i<=a} C(b+2-i,i) x^{a+1-i}
/// as a polynomial identity. Requires a >= 1 and b >= 2a - 2.
bool pascal_merge_check(std::size_t a, std::size_t b);

/// Fibonacci polynomials: P_0 = 0, P_1 = 1, P_2 = x, P_m = x P_{m-1} + P_{m-2}.
PolyN fibonacci_poly(std::size_t m);

/// Bivariate polynomial in (X, Y) with natural coefficients.
class BiPolyN {
public:
    using Exponents = std::pair<unsigned, unsigned>;

    BiPolyN() = default;
    static BiPolyN constant(Natural c);
    static BiPolyN monomial(Natural coeff, unsigned i, unsigned j);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::map<Exponents, Natural> const& terms() const noexcept { return terms_; }
    Natural coeff(unsigned i, unsigned j) const;
    unsigned total_degree() const noexcept;

    BiPolyN& operator+=(BiPolyN const& g);
    friend BiPolyN operator+(BiPolyN f, BiPolyN const& g) { return f += g; }

    BiPolyN times_x() const;
    BiPolyN times_y() const;
    /// f(Y, X).
    BiPolyN swapped() const;

    Natural eval(Natural const& x, Natural const& y) const;

    /// Every monomial has the form X^(k + dx) Y^(k + dy) for some k >= 0.
    bool has_offset_balance(unsigned dx, unsigned dy) const;

    bool operator==(BiPolyN const&) const = default;
    std::string str() const;

private:
    void add_term(Exponents e, Natural const& c);
    std::map<Exponents, Natural> terms_;
};

/// Symbolic 2x2 matrix, row-major.
using BiMat2 = std::array<BiPolyN, 4>;

} // namespace matmonoid
