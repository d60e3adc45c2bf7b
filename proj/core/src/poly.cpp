#include "matmonoid/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace matmonoid {

PolyN::PolyN(std::vector<Natural> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto const& c : coeffs_)
        if (sgn(c) < 0) throw std::invalid_argument("PolyN coefficients must be nonnegative");
    normalize();
}

PolyN::PolyN(std::initializer_list<unsigned long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (unsigned long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

PolyN PolyN::monomial(Natural coeff, std::size_t exponent) {
    std::vector<Natural> c(exponent + 1, Natural(0));
    c[exponent] = std::move(coeff);
    return PolyN(std::move(c));
}

void PolyN::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Natural PolyN::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Natural(0);
}

PolyN& PolyN::operator+=(PolyN const& g) {
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Natural(0));
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
    normalize();
    return *this;
}

PolyN operator*(Natural const& k, PolyN f) {
    for (auto& c : f.coeffs_) c *= k;
    f.normalize();
    return f;
}

PolyN operator*(PolyN const& f, PolyN const& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Natural> out(f.coeffs_.size() + g.coeffs_.size() - 1, Natural(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return PolyN(std::move(out));
}

PolyN PolyN::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Natural> out(k, Natural(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return PolyN(std::move(out));
}

PolyN PolyN::substitute_square() const {
    if (is_zero()) return {};
    std::vector<Natural> out(2 * coeffs_.size() - 1, Natural(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
    return PolyN(std::move(out));
}

std::string PolyN::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        auto const& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c.get_str();
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

bool dominates(PolyN const& f, PolyN const& g) {
    std::size_t const top = std::max(f.coeffs().size(), g.coeffs().size());
    Natural tail_f = 0;
    Natural tail_g = 0;
    for (std::size_t k = top; k-- > 0;) {
        if (k < f.coeffs().size()) tail_f += f.coeffs()[k];
        if (k < g.coeffs().size()) tail_g += g.coeffs()[k];
        if (tail_f < tail_g) return false;
    }
    return true;
}

Natural eval(PolyN const& f, Natural const& r) {
    Natural acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * r + f.coeffs()[i];
    return acc;
}

BinomialTable::BinomialTable(std::size_t nmax) {
    rows_.reserve(nmax + 1);
    rows_.push_back({Natural(1)});
    for (std::size_t n = 1; n <= nmax; ++n) {
        auto const& prev = rows_.back();
        std::vector<Natural> row(n + 1, Natural(1));
        for (std::size_t k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
        rows_.push_back(std::move(row));
    }
}

Natural const& BinomialTable::operator()(long n, long k) const {
    if (n < 0 || k < 0 || k > n) return zero_;
    if (static_cast<std::size_t>(n) >= rows_.size())
        throw std::out_of_range("binomial table too small");
    return rows_[n][k];
}

namespace {

// sum_{i=0}^{count-1} (C(top1 - i, i) + C(top2 - i, i)) x^{lead - i}
PolyN binomial_series(BinomialTable const& C, long count, long lead, long top1, long top2, bool second) {
    std::vector<Natural> out(static_cast<std::size_t>(lead) + 1, Natural(0));
    for (long i = 0; i < count; ++i) {
        Natural c = C(top1 - i, i);
        if (second) c += C(top2 - i, i);
        out[lead - i] += c;
    }
    return PolyN(std::move(out));
}

void require_positive(std::size_t n, char const* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + " is defined for n >= 1 only");
}

} // namespace

PolyN f_poly(std::size_t n) {
    long const m = static_cast<long>(n);
    BinomialTable C(2 * n + 1);
    return binomial_series(C, m + 1, m, 2 * m, 0, false);
}

PolyN g_poly(std::size_t n) {
    long const m = static_cast<long>(n);
    BinomialTable C(2 * n + 1);
    return binomial_series(C, m + 1, m + 1, 2 * m + 1, 0, false);
}

PolyN h_poly(std::size_t n) {
    require_positive(n, "H_n");
    long const m = static_cast<long>(n);
    BinomialTable C(2 * n);
    return binomial_series(C, m + 1, m, 2 * m, 2 * m - 1, true);
}

PolyN i_poly(std::size_t n) {
    require_positive(n, "I_n");
    long const m = static_cast<long>(n);
    BinomialTable C(2 * n);
    return binomial_series(C, m, m, 2 * m - 1, 2 * m - 2, true);
}

std::pair<PolyN, PolyN> fg_by_recurrence(std::size_t n) {
    PolyN f{1};
    PolyN g = PolyN::x();
    for (std::size_t k = 0; k < n; ++k) {
        f += g;
        g = f.shifted(1) + g;
    }
    return {f, g};
}

std::pair<PolyN, PolyN> hi_by_recurrence(std::size_t n) {
    require_positive(n, "H_n/I_n");
    PolyN h{1, 2};
    PolyN i{0, 2};
    for (std::size_t k = 1; k < n; ++k) {
        PolyN next_h = h + h.shifted(1) + i;
        PolyN next_i = h.shifted(1) + i;
        h = std::move(next_h);
        i = std::move(next_i);
    }
    return {h, i};
}

std::pair<PolyN, PolyN> left_column_polys(Word const& w) {
    // Track the whole matrix since M L_u mixes the right column into the left.
    PolyN a{1}, b, c, d{1};
    for (Letter x : w.letters()) {
        if (x == Letter::L) {
            a += b.shifted(1);
            c += d.shifted(1);
        } else {
            b += a;
            d += c;
        }
    }
    return {a, c};
}

bool pascal_merge_check(std::size_t a, std::size_t b) {
    if (a < 1 || b + 2 < 2 * a)
        throw std::invalid_argument("pascal_merge_check requires a >= 1 and b >= 2a - 2");
    long const A = static_cast<long>(a);
    long const B = static_cast<long>(b);
    BinomialTable C(b + 2);
    std::vector<Natural> lhs(a + 2, Natural(0));
    std::vector<Natural> rhs(a + 2, Natural(0));
    for (long i = 0; i <= A - 1; ++i) lhs[A - i] += C(B - i, i);
    for (long i = 0; i <= A; ++i) lhs[A + 1 - i] += C(B + 1 - i, i);
    for (long i = 0; i <= A; ++i) rhs[A + 1 - i] += C(B + 2 - i, i);
    return PolyN(std::move(lhs)) == PolyN(std::move(rhs));
}

PolyN fibonacci_poly(std::size_t m) {
    if (m == 0) return {};
    PolyN prev;     // P_0
    PolyN cur{1};   // P_1
    for (std::size_t k = 1; k < m; ++k) {
        PolyN next = cur.shifted(1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BiPolyN BiPolyN::constant(Natural c) { return monomial(std::move(c), 0, 0); }

BiPolyN BiPolyN::monomial(Natural coeff, unsigned i, unsigned j) {
    BiPolyN out;
    out.add_term({i, j}, coeff);
    return out;
}

void BiPolyN::add_term(Exponents e, Natural const& c) {
    if (sgn(c) < 0) throw std::invalid_argument("BiPolyN coefficients must be nonnegative");
    if (sgn(c) == 0) return;
    terms_[e] += c;
}

Natural BiPolyN::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Natural(0) : it->second;
}

unsigned BiPolyN::total_degree() const noexcept {
    unsigned deg = 0;
    for (auto const& [e, c] : terms_) deg = std::max(deg, e.first + e.second);
    return deg;
}

BiPolyN& BiPolyN::operator+=(BiPolyN const& g) {
    for (auto const& [e, c] : g.terms_) add_term(e, c);
    return *this;
}

BiPolyN BiPolyN::times_x() const {
    BiPolyN out;
    for (auto const& [e, c] : terms_) out.terms_.emplace(Exponents{e.first + 1, e.second}, c);
    return out;
}

BiPolyN BiPolyN::times_y() const {
    BiPolyN out;
    for (auto const& [e, c] : terms_) out.terms_.emplace(Exponents{e.first, e.second + 1}, c);
    return out;
}

BiPolyN BiPolyN::swapped() const {
    BiPolyN out;
    for (auto const& [e, c] : terms_) out.terms_.emplace(Exponents{e.second, e.first}, c);
    return out;
}

Natural BiPolyN::eval(Natural const& x, Natural const& y) const {
    Natural acc = 0;
    for (auto const& [e, c] : terms_) {
        Natural px, py;
        mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), e.first);
        mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), e.second);
        acc += c * px * py;
    }
    return acc;
}

bool BiPolyN::has_offset_balance(unsigned dx, unsigned dy) const {
    for (auto const& [e, c] : terms_) {
        if (e.first < dx || e.second < dy) return false;
        if (e.first - dx != e.second - dy) return false;
    }
    return true;
}

std::string BiPolyN::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto const& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool const bare = e.first == 0 && e.second == 0;
        if (bare || c != 1) os << c.get_str();
        if (e.first >= 1) os << 'X';
        if (e.first >= 2) os << '^' << e.first;
        if (e.second >= 1) os << 'Y';
        if (e.second >= 2) os << '^' << e.second;
    }
    return os.str();
}

} // namespace matmonoid
