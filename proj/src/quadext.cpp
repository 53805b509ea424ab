#include "periodkit/quadext.hpp"

namespace periodkit {

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw PreconditionError("inverse of zero in Q(sqrt 2)");
  return {a_ / n, -b_ / n};
}

std::string QuadExt::to_string() const {
  if (sgn(b_) == 0) return periodkit::to_string(a_);
  std::string surd = b_ == 1 ? "sqrt2" : b_ == -1 ? "-sqrt2" : periodkit::to_string(b_) + "*sqrt2";
  if (sgn(a_) == 0) return surd;
  std::string s = periodkit::to_string(a_);
  if (sgn(b_) < 0) return s + " - " + (b_ == -1 ? "sqrt2" : periodkit::to_string(Rational(-b_)) + "*sqrt2");
  return s + " + " + surd;
}

}  // namespace periodkit
