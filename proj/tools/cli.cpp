#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "periodkit/abelian.hpp"
#include "periodkit/chebyshev.hpp"
#include "periodkit/io.hpp"
#include "periodkit/poly_parse.hpp"
#include "periodkit/resultant.hpp"
#include "periodkit/sturm.hpp"

namespace periodkit {

namespace {

constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Options {
  std::string format = "text";
  std::string out_path;
  bool decimals = false;
  bool serial = false;

  std::string input;
  int order = 0;
  std::string route = "cleared";

  int k = 0;
  int n = 50;

  std::string poly, from = "-inf", to = "inf";
  std::string p, q;

  std::string potential = "1/2 x^2 + 1/3 x^3";
  std::string target, method = "auto", param = "auto", mode = "relaxed";
  std::vector<std::string> fs;
  int s = 1;
  bool lift = false;
};

Format format_of(const Options& o) { return o.format == "machine" ? Format::Machine : Format::Text; }
Exec exec_of(const Options& o) { return o.serial ? Exec::Serial : Exec::Parallel; }

Bound parse_bound(const std::string& t) {
  if (t == "inf" || t == "+inf") return Bound::pos_inf();
  if (t == "-inf") return Bound::neg_inf();
  return Bound::at(parse_rational(t));
}

// "p" or "(p)/(q)"
UniRatFn parse_ratfn(const std::string& t) {
  auto cut = t.find(")/(");
  if (cut == std::string::npos) return UniRatFn(parse_unipoly(t, 'x'));
  return UniRatFn(parse_unipoly(t.substr(0, cut + 1), 'x'), parse_unipoly(t.substr(cut + 2), 'x'));
}

void coefficient_lines(std::ostream& os, const std::string& tag, const UniPoly& p) {
  for (int i = 0; i <= p.degree(); ++i)
    os << tag << ' ' << i << ' ' << p.coeff(i).get_num().get_str() << ' ' << p.coeff(i).get_den().get_str() << '\n';
}

int cmd_period(const Options& o, std::ostream& os, bool with_period, bool with_area) {
  HamiltonianSpec spec = parse_hamiltonian_file(o.input);
  if (o.order > 0) spec = normalize(spec.original, o.order);
  auto route = o.route == "reference" ? PeriodRoute::Reference : PeriodRoute::Cleared;
  PeriodExpansion e = expand_period(spec, exec_of(o), route);
  Rational divisor = e.scale_applied ? Rational(1) : e.scale.radicand;
  std::string prefix = e.scale_applied ? "" : "1/sqrt(" + to_string(divisor) + ") * ";
  auto one = [&](const char* name, const Series<PiRational>& s) {
    Series<PiRational> sh = s.with_var("h");
    if (format_of(o) == Format::Machine) {
      os << "# " << name << "(h)\n";
      if (!e.scale_applied) os << "# divide by sqrt(" << to_string(divisor) << ")\n";
      os << emit_series(sh, Format::Machine);
    } else {
      os << name << "(h) = " << prefix << emit_series(sh, Format::Text) << '\n';
    }
    if (o.decimals) os << emit_decimals(sh, divisor);
  };
  if (with_period) one("T", e.period_h);
  if (with_area) one("A", e.area_h);
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& os) {
  if (o.k < 0) throw PreconditionError("abelian-reduce: k >= 0 required");
  ReductionPair r = reduce(o.k);
  UniPoly p = r.p.with_var('h'), q = r.q.with_var('h');
  if (format_of(o) == Format::Machine) {
    os << "# I_" << o.k << " = p(h) I_0 + q(h) I_1\n";
    coefficient_lines(os, "p", p);
    coefficient_lines(os, "q", q);
  } else {
    os << "I_" << o.k << " = (" << p.to_string() << ") I_0 + (" << q.to_string() << ") I_1\n";
  }
  return 0;
}

int cmd_identities(const Options& o, std::ostream& os) {
  if (o.k < 1) throw PreconditionError("abelian-identities: k >= 1 required");
  bool all = true;
  for (const auto& c : identity_suite(o.k)) {
    os << c.identity << ' ' << c.k << ' ' << (c.pass ? "pass" : "FAIL") << '\n';
    all = all && c.pass;
  }
  os << "all_pass " << (all ? "true" : "false") << '\n';
  return all ? 0 : kExitError;
}

int cmd_wronskians(const Options& o, std::ostream& os) {
  int order = o.order > 0 ? o.order : o.n;
  EctReport r = wronskians_at_zero(o.n, order, exec_of(o));
  bool machine = format_of(o) == Format::Machine;
  os << "n " << r.n << '\n' << "capacity " << r.capacity << '\n' << "series_order " << r.series_order_used << '\n';
  for (size_t k = 0; k < r.wronskian_values.size(); ++k) {
    const Rational& w = r.wronskian_values[k];
    if (machine)
      os << k << ' ' << w.get_num().get_str() << ' ' << w.get_den().get_str() << '\n';
    else
      os << "W_" << k << "(0) = " << to_string(w) << '\n';
    if (o.decimals) os << "  ~ " << decimal_string(w) << '\n';
  }
  os << "all_nonzero " << (r.all_nonzero ? "true" : "false") << '\n';
  return 0;
}

int cmd_sturm(const Options& o, std::ostream& os) {
  UniPoly p = parse_unipoly(o.poly);
  SturmReport r = count_real_roots(p, parse_bound(o.from), parse_bound(o.to));
  if (format_of(o) == Format::Machine) {
    os << "polynomial " << p.to_string() << '\n';
    os << "interval " << r.lo.to_string() << ' ' << r.hi.to_string() << '\n';
    os << "evaluated " << r.eval_lo.to_string() << ' ' << r.eval_hi.to_string() << '\n';
    os << "sturm_length " << r.sequence_length << '\n';
    os << "sign_changes " << r.changes_lo << ' ' << r.changes_hi << '\n';
    os << "root_count " << r.root_count << '\n';
  } else {
    os << r.root_count << '\n';
  }
  return 0;
}

int cmd_resultant(const Options& o, std::ostream& os) {
  UniPoly r = resultant_in_second_var(parse_bipoly(o.p), parse_bipoly(o.q));
  if (format_of(o) == Format::Machine)
    coefficient_lines(os, "c", r);
  else
    os << "Res_z = " << r.to_string() << '\n';
  return 0;
}

std::optional<ParamSpec> choose_param(const Options& o, const InvolutionSpec& inv) {
  if (o.param == "none") return std::nullopt;
  if (o.param == "standard") return cubic_parameterization();
  if (o.param == "conic") return conic_parameterization(inv);
  ParamSpec std_p = cubic_parameterization();
  if (check_parameterization(std_p, inv).ok()) return std_p;
  try {
    ParamSpec c = conic_parameterization(inv);
    if (check_parameterization(c, inv).ok()) return c;
  } catch (const PreconditionError&) {
  }
  return std::nullopt;
}

void certificate_block(std::ostream& os, const SignCertificate& c, bool machine, const std::string& label) {
  if (machine) {
    os << "certificate " << label << '\n' << emit_certificate(c) << "end\n";
  } else {
    os << "  " << label << ": " << to_string(c.method) << " on " << c.target.to_string() << " -> " << c.root_count
       << " roots in (" << c.lo.to_string() << ", " << c.hi.to_string() << "), " << to_string(c.verdict) << '\n';
  }
}

int cmd_cheb(const Options& o, std::ostream& os) {
  UniPoly A = parse_unipoly(o.potential, 'x');
  bool machine = format_of(o) == Format::Machine;
  InvolutionSpec inv = involution_curve(A, 2);
  auto param = choose_param(o, inv);

  if (!o.target.empty()) {
    BiPoly t = parse_bipoly(o.target);
    std::vector<SignCertificate> certs;
    if (o.method != "parameterization") certs.push_back(certify_sign(t, inv, SignMethod::Resultant));
    bool need_param = o.method == "parameterization" ||
                      (o.method == "auto" && certs.back().verdict == SignVerdict::Inconclusive);
    if (need_param) {
      if (!param) throw PreconditionError("cheb-verify: no parameterization available for this curve");
      certs.push_back(certify_sign(t, inv, SignMethod::Parameterization, param));
    }
    for (size_t i = 0; i < certs.size(); ++i) certificate_block(os, certs[i], machine, std::to_string(i));
    SignVerdict v = certs.back().verdict;
    os << "verdict " << to_string(v) << '\n';
    return v == SignVerdict::Inconclusive ? kExitInconclusive : 0;
  }

  if (o.fs.empty()) throw PreconditionError("cheb-verify: give --target or at least one --f");
  std::vector<UniRatFn> fs;
  int s = o.s;
  for (const auto& f : o.fs) fs.push_back(parse_ratfn(f));
  if (o.lift) {
    for (auto& f : fs) f = power_lift(f, A, LiftVariant::HMultiplied, 2 * s - 1);
    ++s;
  }
  ConditionMode mode = o.mode == "strict" ? ConditionMode::Strict : ConditionMode::Relaxed;
  TheoremBReport r = theoremB_verdict(fs, A, s, mode, param);
  bool undecided = false;
  for (const auto& st : r.steps) {
    os << "step " << st.k << '\n';
    os << "  wronskian_zero " << (st.wronskian.is_zero() ? "true" : "false") << '\n';
    if (!st.wronskian.is_zero()) {
      os << "  m " << st.factors.m << '\n';
      os << "  R " << st.factors.R.to_string() << '\n';
      os << "  denominator " << st.factors.denominator.to_string() << '\n';
      os << "  constant " << to_string(st.factors.constant) << '\n';
    }
    for (size_t i = 0; i < st.certificates.size(); ++i)
      certificate_block(os, st.certificates[i], machine, std::to_string(st.k) + "." + std::to_string(i));
    os << "  nonvanishing " << (st.nonvanishing ? "true" : "false") << '\n';
    if (!st.nonvanishing && !st.wronskian.is_zero()) {
      bool definite = false;
      for (const auto& c : st.certificates) definite = definite || c.verdict == SignVerdict::Vanishing;
      undecided = undecided || !definite;
    }
  }
  os << "n " << r.n << "\ns " << r.s << '\n';
  os << "ct_system " << (r.ct_system ? "true" : "false") << '\n';
  os << "condition_strict " << (r.condition_strict ? "true" : "false") << " (s > 2(n-2))\n";
  os << "condition_relaxed " << (r.condition_original ? "true" : "false") << " (s > n-2)\n";
  os << "mode " << to_string(r.mode) << '\n';
  os << "ect " << (r.ect ? "true" : "false") << '\n';
  return undecided ? kExitInconclusive : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact period functions, Abelian integrals and Chebyshev certificates"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    c->add_option("--out", o.out_path, "also write the output here");
    c->add_flag("--decimals", o.decimals, "print 30-digit decimals next to exact values");
  };

  auto* period = app.add_subcommand("period", "T(h) and A(h) series");
  auto* area = app.add_subcommand("area", "A(h) series");
  for (auto* c : {period, area}) {
    common(c);
    c->add_option("--input", o.input, "Hamiltonian file")->required();
    c->add_option("--order", o.order, "rho-order, overrides the file")->check(CLI::Range(2, 1000));
    c->add_option("--route", o.route)->check(CLI::IsMember({"reference", "cleared"}));
    c->add_flag("--serial", o.serial, "serial kernels");
  }

  auto* red = app.add_subcommand("abelian-reduce", "I_k in the basis I_0, I_1");
  common(red);
  red->add_option("--k", o.k)->required();

  auto* ids = app.add_subcommand("abelian-identities", "recurrence and derivative identity checks");
  common(ids);
  ids->add_option("--k", o.k)->required();

  auto* wr = app.add_subcommand("abelian-wronskians", "W_k(0) of the G basis");
  common(wr);
  wr->add_option("--n", o.n)->check(CLI::Range(1, 1000));
  wr->add_option("--order", o.order, "series order, default n")->check(CLI::Range(2, 1000));
  wr->add_flag("--serial", o.serial, "serial kernels");

  auto* st = app.add_subcommand("sturm-count", "distinct real roots in an open interval");
  common(st);
  st->add_option("--poly", o.poly)->required();
  st->add_option("--from", o.from, "rational, -inf");
  st->add_option("--to", o.to, "rational, inf");

  auto* rs = app.add_subcommand("resultant", "Res_z(P, Q) for P, Q in x, z");
  common(rs);
  rs->add_option("--p", o.p)->required();
  rs->add_option("--q", o.q)->required();

  auto* ch = app.add_subcommand("cheb-verify", "involution Wronskians and sign certificates");
  common(ch);
  ch->add_option("--potential", o.potential, "A(x)");
  ch->add_option("--target", o.target, "certify the sign of one polynomial in x, z");
  ch->add_option("--method", o.method)->check(CLI::IsMember({"auto", "resultant", "parameterization"}));
  ch->add_option("--param", o.param)->check(CLI::IsMember({"auto", "standard", "conic", "none"}));
  ch->add_option("--f", o.fs, "weights f_k as p or (p)/(q), in order");
  ch->add_option("--s", o.s, "J_k = integral of f_k y^(2s-1) dx")->check(CLI::Range(1, 100));
  ch->add_flag("--lift", o.lift, "lift each f_k to h J_k before the criterion");
  ch->add_option("--mode", o.mode)->check(CLI::IsMember({"relaxed", "strict"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  std::ostringstream buf;
  int status = 0;
  try {
    if (period->parsed()) status = cmd_period(o, buf, true, true);
    else if (area->parsed()) status = cmd_period(o, buf, false, true);
    else if (red->parsed()) status = cmd_reduce(o, buf);
    else if (ids->parsed()) status = cmd_identities(o, buf);
    else if (wr->parsed()) status = cmd_wronskians(o, buf);
    else if (st->parsed()) status = cmd_sturm(o, buf);
    else if (rs->parsed()) status = cmd_resultant(o, buf);
    else if (ch->parsed()) status = cmd_cheb(o, buf);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  out << buf.str();
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitError;
    }
    f << buf.str();
  }
  return status;
}

}  // namespace periodkit
