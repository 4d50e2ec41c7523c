#include "r2sheaf/serre.hpp"

#include "r2sheaf/errors.hpp"

namespace r2sheaf {

void CurveData::validate() const {
  if (d <= 0) throw InvalidInput("curve degree must be positive, got " + to_string(d));
}

Rational c3_from_curve(const NumericalThreefold& x, std::int64_t k, const CurveData& c) {
  c.validate();
  return Rational(2 * c.pa - 2) + Rational(x.a - k) * c.d;
}

Rank2Sheaf sheaf_from_curve(const NumericalThreefold& x, std::int64_t k, const CurveData& c) {
  Rational c3 = c3_from_curve(x, k, c);
  if (c3 < 0) {
    throw InconsistentData("no reflexive sheaf for curve (d=" + to_string(c.d) +
                           ", pa=" + std::to_string(c.pa) + ") with det O(" + std::to_string(k) +
                           ") on " + x.label + ": c3 = " + to_string(c3) + " < 0");
  }
  return Rank2Sheaf::make(x, k, c.d, std::move(c3));
}

GenusResult genus_from_c3(const NumericalThreefold& x, std::int64_t k, const Rational& d,
                          const Rational& c3) {
  GenusResult out;
  out.pa = (c3 - Rational(x.a - k) * d + 2) / 2;
  if (!is_integer(out.pa)) {
    out.consistent = false;
    out.warning = "arithmetic genus " + to_string(out.pa) + " is not an integer";
  } else if (out.pa < 0) {
    out.consistent = false;
    out.warning = "arithmetic genus " + to_string(out.pa) + " is negative";
  }
  return out;
}

}  // namespace r2sheaf
