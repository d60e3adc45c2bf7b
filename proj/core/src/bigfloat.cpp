#include "matmonoid/bigfloat.hpp"

#include <algorithm>
#include <memory>

namespace matmonoid {

BigFloat::BigFloat(long x, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_si(x_, x, MPFR_RNDN);
}

BigFloat::BigFloat(Natural const& x, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_z(x_, x.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat const& o) {
    mpfr_init2(x_, o.precision());
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(x_, MPFR_PREC_MIN);
    mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(BigFloat const& o) {
    if (this != &o) {
        mpfr_set_prec(x_, o.precision());
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

namespace {
mpfr_prec_t joint(BigFloat const& a, BigFloat const& b) {
    return std::max(a.precision(), b.precision());
}
} // namespace

BigFloat operator+(BigFloat const& a, BigFloat const& b) {
    BigFloat r(BigFloat::Uninit{}, joint(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator-(BigFloat const& a, BigFloat const& b) {
    BigFloat r(BigFloat::Uninit{}, joint(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator*(BigFloat const& a, BigFloat const& b) {
    BigFloat r(BigFloat::Uninit{}, joint(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat operator/(BigFloat const& a, BigFloat const& b) {
    BigFloat r(BigFloat::Uninit{}, joint(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(Uninit{}, precision());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(BigFloat const& a) {
    BigFloat r(BigFloat::Uninit{}, a.precision());
    mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
    return r;
}

BigFloat pow(BigFloat const& a, unsigned long k) {
    BigFloat r(BigFloat::Uninit{}, a.precision());
    mpfr_pow_ui(r.x_, a.x_, k, MPFR_RNDN);
    return r;
}

BigFloat abs(BigFloat const& a) {
    BigFloat r(BigFloat::Uninit{}, a.precision());
    mpfr_abs(r.x_, a.x_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const {
    mpfr_exp_t exp = 0;
    std::unique_ptr<char, void (*)(char*)> buf(mpfr_get_str(nullptr, &exp, 10, digits, x_, MPFR_RNDN),
                                               mpfr_free_str);
    std::string mant(buf.get());
    bool const neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::string out = neg ? "-" : "";
    if (mpfr_zero_p(x_)) return "0";
    if (exp <= 0) {
        out += "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
    } else if (static_cast<std::size_t>(exp) >= mant.size()) {
        out += mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
    } else {
        out += mant.substr(0, exp) + "." + mant.substr(exp);
    }
    return out;
}

double relative_error(BigFloat const& approx, Natural const& exact) {
    BigFloat const e(exact, approx.precision());
    return (abs(approx - e) / e).to_double();
}

} // namespace matmonoid
