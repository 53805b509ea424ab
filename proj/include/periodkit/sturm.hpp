#pragma once

#include <optional>
#include <string>
#include <vector>

#include "periodkit/unipoly.hpp"

namespace periodkit {

/// Interval endpoint: a rational or ±infinity.
struct Bound {
  enum class Kind { Finite, NegInf, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static Bound at(const Rational& v) { return {Kind::Finite, v}; }
  static Bound neg_inf() { return {Kind::NegInf, Rational(0)}; }
  static Bound pos_inf() { return {Kind::PosInf, Rational(0)}; }
  bool finite() const { return kind == Kind::Finite; }
  std::string to_string() const;
};

bool operator<(const Bound& a, const Bound& b);

/// Result of a Sturm count on an open interval.
struct SturmReport {
  UniPoly polynomial;
  Bound lo, hi;                 // requested open interval
  Bound eval_lo, eval_hi;       // where the sequence was actually evaluated
  bool lo_perturbed = false;    // lo was a root and was moved inward
  bool hi_perturbed = false;
  int changes_lo = 0;
  int changes_hi = 0;
  int root_count = 0;
  size_t sequence_length = 0;
};

/// Negated-remainder chain of the square-free part of p. Throws on p = 0.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Sign variations of the chain at a bound (zeros skipped).
int sign_variations(const std::vector<UniPoly>& seq, const Bound& at);

/// Number of distinct real roots of p in the open interval (a, b).
/// An endpoint that is a root is moved inward by an exact dyadic amount
/// small enough that no other root is skipped; the report records it.
SturmReport count_real_roots(const UniPoly& p, const Bound& a, const Bound& b);
SturmReport count_real_roots(const UniPoly& p, const Rational& a, const Rational& b);

/// Isolating intervals for the distinct real roots in the open interval (a, b).
/// Each entry is either a point [r, r] (exact rational root) or an open
/// interval (lo, hi) with rational non-root endpoints containing exactly one root.
struct RootInterval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
};
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Bound& a, const Bound& b);

/// Shrinks an isolating interval until hi - lo <= width.
RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width);

/// Cauchy bound: every real root has |r| < bound.
Rational root_bound(const UniPoly& p);

/// Rational roots of p, ascending, each once.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace periodkit
