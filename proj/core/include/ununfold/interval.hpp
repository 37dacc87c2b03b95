#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ununfold {

/// RAII wrapper for a 256-bit MPFR number.
class MpReal {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  MpReal() { mpfr_init2(value_, kPrecision); mpfr_set_zero(value_, 1); }
  explicit MpReal(double v) { mpfr_init2(value_, kPrecision); mpfr_set_d(value_, v, MPFR_RNDN); }
  MpReal(const MpReal& other) { mpfr_init2(value_, kPrecision); mpfr_set(value_, other.value_, MPFR_RNDN); }
  MpReal(MpReal&& other) noexcept { mpfr_init2(value_, kPrecision); mpfr_swap(value_, other.value_); }
  MpReal& operator=(const MpReal& other) {
    if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
    return *this;
  }
  MpReal& operator=(MpReal&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~MpReal() { mpfr_clear(value_); }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  double toDouble(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }

  friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

enum class Rounding { Down, Up };

/// Directed rounding on doubles: the round-to-nearest result is corrected by
/// one ulp in the requested direction whenever the error-free transformation
/// shows the exact result lies on that side.
struct F64Rounding {
  using value_type = double;

  static double fromDouble(double v) { return v; }
  static double toDouble(double v, Rounding) { return v; }
  static bool isZero(double v) { return v == 0.0; }
  static bool isNaN(double v) { return std::isnan(v); }
  static double infinity(bool negative) {
    return negative ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  }

  static double add(double a, double b, Rounding r) {
    const double s = a + b;
    if (!std::isfinite(s)) return s;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return adjust(s, err, r);
  }
  static double sub(double a, double b, Rounding r) { return add(a, -b, r); }
  static double mul(double a, double b, Rounding r) {
    const double p = a * b;
    if (!std::isfinite(p)) return p;
    if (a != 0 && b != 0 && std::abs(p) < kTiny) return widen(p, r);
    return adjust(p, std::fma(a, b, -p), r);
  }
  static double div(double a, double b, Rounding r) {
    const double q = a / b;
    if (!std::isfinite(q)) return q;
    if (a != 0 && std::abs(q) < kTiny) return widen(q, r);
    const double rem = std::fma(-q, b, a);
    return adjust(q, b > 0 ? rem : -rem, r);
  }
  static double sqrt(double a, Rounding r) {
    const double s = std::sqrt(a);
    if (!std::isfinite(s) || s == 0) return s;
    return adjust(s, std::fma(-s, s, a), r);
  }

 private:
  static constexpr double kTiny = 1e-290;
  static double widen(double v, Rounding r) {
    return std::nextafter(v, r == Rounding::Down ? -std::numeric_limits<double>::infinity()
                                                 : std::numeric_limits<double>::infinity());
  }
  // `err` has the sign of (exact - rounded).
  static double adjust(double v, double err, Rounding r) {
    if (r == Rounding::Down && err < 0) return widen(v, r);
    if (r == Rounding::Up && err > 0) return widen(v, r);
    return v;
  }
};

struct MpRounding {
  using value_type = MpReal;

  static MpReal fromDouble(double v) { return MpReal(v); }
  static double toDouble(const MpReal& v, Rounding r) { return v.toDouble(rnd(r)); }
  static bool isZero(const MpReal& v) { return mpfr_zero_p(v.get()) != 0; }
  static bool isNaN(const MpReal& v) { return mpfr_nan_p(v.get()) != 0; }
  static MpReal infinity(bool negative) {
    MpReal out;
    mpfr_set_inf(out.get(), negative ? -1 : 1);
    return out;
  }

  static MpReal add(const MpReal& a, const MpReal& b, Rounding r) { return op(mpfr_add, a, b, r); }
  static MpReal sub(const MpReal& a, const MpReal& b, Rounding r) { return op(mpfr_sub, a, b, r); }
  static MpReal mul(const MpReal& a, const MpReal& b, Rounding r) { return op(mpfr_mul, a, b, r); }
  static MpReal div(const MpReal& a, const MpReal& b, Rounding r) { return op(mpfr_div, a, b, r); }
  static MpReal sqrt(const MpReal& a, Rounding r) {
    MpReal out;
    mpfr_sqrt(out.get(), a.get(), rnd(r));
    return out;
  }

  static mpfr_rnd_t rnd(Rounding r) { return r == Rounding::Down ? MPFR_RNDD : MPFR_RNDU; }

 private:
  using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static MpReal op(BinaryOp f, const MpReal& a, const MpReal& b, Rounding r) {
    MpReal out;
    f(out.get(), a.get(), b.get(), rnd(r));
    return out;
  }
};

enum class Sign { Negative, Zero, Positive, Unknown };

/// Closed interval [lo, hi] with outward-rounded arithmetic: the exact real
/// result of any composed expression lies inside the computed interval.
template <class R>
class Interval {
 public:
  using T = typename R::value_type;

  Interval() : lo_(R::fromDouble(0)), hi_(R::fromDouble(0)) {}
  Interval(double v) : lo_(R::fromDouble(v)), hi_(R::fromDouble(v)) {}  // NOLINT: implicit by design of generic code
  Interval(T lo, T hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  const T& lo() const noexcept { return lo_; }
  const T& hi() const noexcept { return hi_; }
  double lowerDouble() const { return R::toDouble(lo_, Rounding::Down); }
  double upperDouble() const { return R::toDouble(hi_, Rounding::Up); }
  double midpoint() const { return 0.5 * (lowerDouble() + upperDouble()); }
  bool contains(double v) const { return !(R::fromDouble(v) < lo_) && !(hi_ < R::fromDouble(v)); }
  bool containsZero() const { return contains(0.0); }

  Sign sign() const {
    if (R::isNaN(lo_) || R::isNaN(hi_)) return Sign::Unknown;
    if (lo_ > R::fromDouble(0)) return Sign::Positive;
    if (hi_ < R::fromDouble(0)) return Sign::Negative;
    if (R::isZero(lo_) && R::isZero(hi_)) return Sign::Zero;
    return Sign::Unknown;
  }

  bool identical(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {R::add(a.lo_, b.lo_, Rounding::Down), R::add(a.hi_, b.hi_, Rounding::Up)};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return {R::sub(a.lo_, b.hi_, Rounding::Down), R::sub(a.hi_, b.lo_, Rounding::Up)};
  }
  friend Interval operator-(const Interval& a) {
    const T zero = R::fromDouble(0);
    return {R::sub(zero, a.hi_, Rounding::Down), R::sub(zero, a.lo_, Rounding::Up)};
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const T* l[2] = {&a.lo_, &a.hi_};
    const T* r[2] = {&b.lo_, &b.hi_};
    T lo = R::mul(*l[0], *r[0], Rounding::Down);
    T hi = R::mul(*l[0], *r[0], Rounding::Up);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        T d = R::mul(*l[i], *r[j], Rounding::Down);
        T u = R::mul(*l[i], *r[j], Rounding::Up);
        if (d < lo) lo = std::move(d);
        if (u > hi) hi = std::move(u);
      }
    }
    return {std::move(lo), std::move(hi)};
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    const T zero = R::fromDouble(0);
    if (!(b.lo_ > zero) && !(b.hi_ < zero)) return {R::infinity(true), R::infinity(false)};
    const T* l[2] = {&a.lo_, &a.hi_};
    const T* r[2] = {&b.lo_, &b.hi_};
    T lo = R::div(*l[0], *r[0], Rounding::Down);
    T hi = R::div(*l[0], *r[0], Rounding::Up);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        T d = R::div(*l[i], *r[j], Rounding::Down);
        T u = R::div(*l[i], *r[j], Rounding::Up);
        if (d < lo) lo = std::move(d);
        if (u > hi) hi = std::move(u);
      }
    }
    return {std::move(lo), std::move(hi)};
  }
  friend Interval sqrt(const Interval& a) {
    const T zero = R::fromDouble(0);
    const T lo = a.lo_ < zero ? zero : a.lo_;
    return {R::sqrt(lo, Rounding::Down), R::sqrt(a.hi_, Rounding::Up)};
  }

 private:
  T lo_, hi_;
};

using IntervalF64 = Interval<F64Rounding>;
using IntervalMp = Interval<MpRounding>;

inline Sign signOf(double v) { return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero); }
template <class R>
Sign signOf(const Interval<R>& v) {
  return v.sign();
}

/// Enclosures of cos/sin of an angle given in degrees, computed with MPFR.
IntervalMp cosDeg(double degrees);
IntervalMp sinDeg(double degrees);

/// Outward conversion of a 256-bit enclosure to a double enclosure.
IntervalF64 toF64(const IntervalMp& v);

}  // namespace ununfold
