#pragma once

#include <string>
#include <string_view>

#include "periodkit/bipoly.hpp"
#include "periodkit/chebyshev.hpp"
#include "periodkit/period.hpp"
#include "periodkit/series.hpp"

// Hamiltonian input files and the text / machine output formats.

namespace periodkit {

/// Lines `term <i> <j> <p/q>` (coefficient of x^i y^j), `order <N>`, and `#` comments.
/// Duplicate (i, j) terms are summed.
struct HamiltonianInput {
  BiPoly h{'x', 'y'};
  int order = 0;
};
HamiltonianInput read_hamiltonian(std::string_view text);
/// read_hamiltonian followed by normalize.
HamiltonianSpec parse_hamiltonian(std::string_view text);
HamiltonianSpec parse_hamiltonian_file(const std::string& path);

enum class Format { Text, Machine };

/// Text: `pi * ( 2 + 5/3 h + ... + O(h^7) )`, or `0 + O(h^N)`.
/// Machine: one line `k <num> <den>` per k = 0..order, meaning (num/den)·π·h^k.
std::string emit_series(const Series<PiRational>& s, Format format);
/// Inverse of the machine format. Blank and `#` lines are skipped; the order is the largest k.
Series<PiRational> parse_series_machine(std::string_view text, std::string var = "h");
/// One line per nonzero coefficient with a 30-digit value of c·π (times 1/√divisor).
std::string emit_decimals(const Series<PiRational>& s, const Rational& divisor = Rational(1));

/// 30 significant digits of a rational.
std::string decimal_string(const Rational& q);

/// Key-value block listing target, reduced polynomial, interval and Sturm data,
/// enough to recount the roots independently.
std::string emit_certificate(const SignCertificate& c);

}  // namespace periodkit
