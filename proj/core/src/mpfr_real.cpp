#include "ununfold/interval.hpp"

namespace ununfold {

namespace {

enum class Trig { Cos, Sin };

// The radian argument is enclosed in [lo, hi]; since |cos'|, |sin'| <= 1 the
// function values at the midpoint widened by the argument width enclose the
// true value without any monotonicity assumption.
IntervalMp trigDeg(double degrees, Trig which) {
  constexpr mpfr_prec_t prec = MpReal::kPrecision + 64;
  mpfr_t piLo, piHi, lo, hi, width, val;
  mpfr_inits2(prec, piLo, piHi, lo, hi, width, val, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(piLo, MPFR_RNDD);
  mpfr_const_pi(piHi, MPFR_RNDU);
  const bool negative = degrees < 0;
  mpfr_mul_d(lo, negative ? piHi : piLo, degrees, MPFR_RNDD);
  mpfr_div_ui(lo, lo, 180, MPFR_RNDD);
  mpfr_mul_d(hi, negative ? piLo : piHi, degrees, MPFR_RNDU);
  mpfr_div_ui(hi, hi, 180, MPFR_RNDU);
  mpfr_sub(width, hi, lo, MPFR_RNDU);

  auto eval = [&](mpfr_rnd_t rnd) {
    if (which == Trig::Cos) {
      mpfr_cos(val, lo, rnd);
    } else {
      mpfr_sin(val, lo, rnd);
    }
  };
  MpReal outLo, outHi;
  eval(MPFR_RNDD);
  mpfr_sub(outLo.get(), val, width, MPFR_RNDD);
  eval(MPFR_RNDU);
  mpfr_add(outHi.get(), val, width, MPFR_RNDU);
  mpfr_clears(piLo, piHi, lo, hi, width, val, static_cast<mpfr_ptr>(nullptr));
  return {std::move(outLo), std::move(outHi)};
}

}  // namespace

IntervalMp cosDeg(double degrees) { return trigDeg(degrees, Trig::Cos); }
IntervalMp sinDeg(double degrees) { return trigDeg(degrees, Trig::Sin); }

IntervalF64 toF64(const IntervalMp& v) { return {v.lowerDouble(), v.upperDouble()}; }

}  // namespace ununfold
