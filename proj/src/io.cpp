#include "periodkit/io.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace periodkit {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int parse_int(const std::string& w, int line, const char* what) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(w, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != w.size() || w.empty()) throw ParseError(std::string("malformed ") + what + " '" + w + "'", line);
  return static_cast<int>(v);
}

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

std::string real_string(const Real& v) {
  std::ostringstream os;
  os << std::setprecision(30) << v;
  return os.str();
}

}  // namespace

HamiltonianInput read_hamiltonian(std::string_view text) {
  HamiltonianInput in;
  bool have_order = false;
  std::istringstream lines{std::string(text)};
  int lineno = 0;
  for (std::string line; std::getline(lines, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto w = split_words(line);
    if (w.empty()) continue;
    if (w[0] == "term") {
      if (w.size() != 4) throw ParseError("term needs <i> <j> <p/q>", lineno);
      int i = parse_int(w[1], lineno, "exponent");
      int j = parse_int(w[2], lineno, "exponent");
      if (i < 0 || j < 0) throw ParseError("negative exponent", lineno);
      Rational c;
      try {
        c = parse_rational(w[3]);
      } catch (const ParseError&) {
        throw ParseError("malformed rational '" + w[3] + "'", lineno);
      }
      in.h += BiPoly::term(c, i, j, {'x', 'y'});
    } else if (w[0] == "order") {
      if (w.size() != 2) throw ParseError("order needs one value", lineno);
      if (have_order) throw ParseError("order given twice", lineno);
      in.order = parse_int(w[1], lineno, "order");
      if (in.order < 2) throw ParseError("order must be at least 2", lineno);
      have_order = true;
    } else {
      throw ParseError("unknown key '" + w[0] + "'", lineno);
    }
  }
  if (!have_order) throw ParseError("missing order", lineno);
  return in;
}

HamiltonianSpec parse_hamiltonian(std::string_view text) {
  auto in = read_hamiltonian(text);
  return normalize(in.h, in.order);
}

HamiltonianSpec parse_hamiltonian_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_hamiltonian(buf.str());
}

std::string emit_series(const Series<PiRational>& s, Format format) {
  std::ostringstream os;
  const std::string& v = s.var();
  if (format == Format::Machine) {
    for (int k = 0; k <= s.order(); ++k) {
      Rational c = s[k].coefficient();
      os << k << ' ' << c.get_num().get_str() << ' ' << c.get_den().get_str() << '\n';
    }
    return os.str();
  }
  std::string tail = "O(" + v + "^" + std::to_string(s.order() + 1) + ")";
  if (s.is_zero()) return "0 + " + tail;
  os << "pi * ( ";
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    Rational c = s[k].coefficient();
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    os << to_string(abs(c));
    if (k == 1) os << ' ' << v;
    if (k > 1) os << ' ' << v << '^' << k;
  }
  os << " + " << tail << " )";
  return os.str();
}

Series<PiRational> parse_series_machine(std::string_view text, std::string var) {
  std::vector<std::pair<int, Rational>> entries;
  std::istringstream lines{std::string(text)};
  int lineno = 0, order = -1;
  for (std::string line; std::getline(lines, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto w = split_words(line);
    if (w.empty()) continue;
    if (w.size() != 3) throw ParseError("series line needs <k> <num> <den>", lineno);
    int k = parse_int(w[0], lineno, "index");
    if (k < 0) throw ParseError("negative index", lineno);
    Rational c;
    try {
      c = parse_rational(w[1] + "/" + w[2]);
    } catch (const ParseError&) {
      throw ParseError("malformed coefficient", lineno);
    }
    entries.emplace_back(k, c);
    order = std::max(order, k);
  }
  if (order < 0) throw ParseError("empty series");
  Series<PiRational> s(order, std::move(var));
  for (auto& [k, c] : entries) s.set(k, PiRational(c));
  return s;
}

std::string decimal_string(const Rational& q) { return real_string(to_real(q)); }

std::string emit_decimals(const Series<PiRational>& s, const Rational& divisor) {
  std::ostringstream os;
  Real scale = boost::math::constants::pi<Real>() / sqrt(to_real(divisor));
  for (int k = 0; k <= s.order(); ++k) {
    Rational c = s[k].coefficient();
    if (sgn(c) == 0) continue;
    os << "  " << s.var() << '^' << k << "  " << to_string(c) << "  ~ " << real_string(to_real(c) * scale) << '\n';
  }
  return os.str();
}

std::string emit_certificate(const SignCertificate& c) {
  std::ostringstream os;
  os << "target " << c.target.to_string() << '\n';
  os << "method " << to_string(c.method) << '\n';
  if (c.image) os << "image " << c.image->to_string() << '\n';
  os << "reduced " << c.reduced.to_string() << '\n';
  os << "interval " << c.lo.to_string() << ' ' << c.hi.to_string() << '\n';
  os << "evaluated " << c.sturm.eval_lo.to_string() << ' ' << c.sturm.eval_hi.to_string() << '\n';
  os << "sturm_length " << c.sturm.sequence_length << '\n';
  os << "sign_changes " << c.sturm.changes_lo << ' ' << c.sturm.changes_hi << '\n';
  os << "root_count " << c.root_count << '\n';
  os << "sample " << to_string(c.sample_point) << ' ' << c.sample_sign << '\n';
  for (const auto& w : c.witnesses) os << "witness " << to_string(w.lo) << ' ' << to_string(w.hi) << '\n';
  os << "verdict " << to_string(c.verdict) << '\n';
  return os.str();
}

}  // namespace periodkit
