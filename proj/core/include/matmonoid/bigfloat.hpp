#pragma once

#include "matmonoid/matrix.hpp"

#include <mpfr.h>

#include <string>

namespace matmonoid {

/// Mantissa bits used for all radical closed-form evaluations.
inline constexpr mpfr_prec_t kClosedFormPrecision = 120;

/// Minimal RAII value wrapper over an MPFR real, round-to-nearest.
class BigFloat {
public:
    BigFloat() : BigFloat(0L) {}
    BigFloat(long x, mpfr_prec_t prec = kClosedFormPrecision);
    explicit BigFloat(Natural const& x, mpfr_prec_t prec = kClosedFormPrecision);
    BigFloat(BigFloat const& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(BigFloat const& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

    friend BigFloat operator+(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator-(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator*(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator/(BigFloat const& a, BigFloat const& b);
    BigFloat operator-() const;

    friend BigFloat sqrt(BigFloat const& a);
    friend BigFloat pow(BigFloat const& a, unsigned long k);
    friend BigFloat abs(BigFloat const& a);

    friend bool operator<(BigFloat const& a, BigFloat const& b) { return mpfr_less_p(a.x_, b.x_); }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    /// Decimal with the given number of significant digits.
    std::string str(int digits = 36) const;

    mpfr_srcptr get() const { return x_; }

private:
    struct Uninit {};
    BigFloat(Uninit, mpfr_prec_t prec) { mpfr_init2(x_, prec); }

    mpfr_t x_;
};

/// |approx - exact| / exact as a double. exact must be nonzero.
double relative_error(BigFloat const& approx, Natural const& exact);

} // namespace matmonoid
