#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "periodkit/io.hpp"
#include "periodkit/poly_parse.hpp"

using namespace periodkit;

namespace {

const char* kCubicFile = "# capillarity cubic\nterm 2 0 1/2\nterm 0 2 1/2\nterm 3 0 1/3\norder 12\n";

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int st = run_cli(args, out, err);
  return {st, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("periodkit_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

std::string line_with(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l.rfind(key + " ", 0) == 0) return l.substr(key.size() + 1);
  return "";
}

}  // namespace

TEST_CASE("hamiltonian files") {
  auto cubic = read_hamiltonian(kCubicFile);
  CHECK(cubic.order == 12);
  CHECK(cubic.h == parse_bipoly("1/2 x^2 + 1/2 y^2 + 1/3 x^3", {'x', 'y'}));
  auto spec = parse_hamiltonian(kCubicFile);
  CHECK(spec.normalized == cubic.h);
  CHECK(spec.scale.rational());

  auto harmonic = parse_hamiltonian("term 2 0 1/2\nterm 0 2 1/2\norder 4\n");
  CHECK(harmonic.normalized == parse_bipoly("1/2 x^2 + 1/2 y^2", {'x', 'y'}));
  CHECK(harmonic.order == 4);

  // duplicates are summed, comments and blank lines ignored
  auto dup = read_hamiltonian("term 2 0 1/4   # half of it\n\nterm 2 0 1/4\nterm 0 2 1/2\norder 3\n");
  CHECK(dup.h == parse_bipoly("1/2 x^2 + 1/2 y^2", {'x', 'y'}));

  CHECK_THROWS_WITH_AS(parse_hamiltonian("term 1 0 1\nterm 2 0 1/2\nterm 0 2 1/2\norder 4\n"),
                       "linear term present: not a center at origin", PreconditionError);
  auto line_of = [](const char* text) {
    try {
      read_hamiltonian(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("term 2 0 1/2\nterm 0 2 1/x\norder 4\n") == 2);
  CHECK(line_of("term 2 0 1/2\nterm -1 2 1\norder 4\n") == 2);
  CHECK(line_of("order 4\nterm 2 0 1/2\ncolor 3\n") == 3);
  CHECK(line_of("order 4\norder 5\n") == 2);
  CHECK(line_of("order 1\n") == 1);
  CHECK(line_of("term 2 0\norder 4\n") == 1);
  CHECK_THROWS_WITH_AS(read_hamiltonian("term 2 0 1/2\n"), doctest::Contains("missing order"), ParseError);
  CHECK_THROWS_WITH_AS(read_hamiltonian("term 2 0 1/q\norder 3"), "line 1: malformed rational '1/q'", ParseError);
  CHECK_THROWS_AS(parse_hamiltonian_file("/nonexistent/file.ham"), PreconditionError);
}

TEST_CASE("series output formats") {
  auto e = expand_period(parse_hamiltonian(kCubicFile));
  auto t = e.period_h.with_var("h");
  CHECK(emit_series(t, Format::Text) ==
        "pi * ( 2 + 5/3 h + 385/72 h^2 + 85085/3888 h^3 + 37182145/373248 h^4 + 1078282205/2239488 h^5 + "
        "1169936192425/483729408 h^6 + O(h^7) )");
  std::string machine = emit_series(t, Format::Machine);
  CHECK(machine.find("\n3 85085 3888\n") != std::string::npos);
  CHECK(machine.rfind("0 2 1\n", 0) == 0);
  CHECK(parse_series_machine(machine) == t);

  CHECK(emit_series(Series<PiRational>(5, "h"), Format::Text) == "0 + O(h^6)");
  Series<PiRational> neg({PiRational(Rational(-1, 2)), PiRational(Rational(0)), PiRational(Rational(3))}, 3, "h");
  CHECK(emit_series(neg, Format::Text) == "pi * ( -1/2 + 3 h^2 + O(h^4) )");

  std::string dec = emit_decimals(t);
  CHECK(dec.find("6.28318530717958647692528676656") != std::string::npos);
  CHECK(decimal_string(Rational(1, 3)) == "0.333333333333333333333333333333");
}

TEST_CASE("machine format round trip on random series") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int order = 1 + static_cast<int>(rng() % 12);
    std::vector<PiRational> c;
    for (int k = 0; k <= order; ++k)
      c.push_back(PiRational(rng() % 3 == 0 ? Rational(0) : oracle::random_rational(rng, 1000, 997)));
    Series<PiRational> s(c, order, "h");
    auto back = parse_series_machine(emit_series(s, Format::Machine));
    CHECK(back == s);
    CHECK(back.order() == order);
  }
  CHECK_THROWS_AS(parse_series_machine("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_series_machine("# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse_series_machine("0 1 0\n"), ParseError);
}

TEST_CASE("command line: period and area") {
  std::string path = temp_file("cubic.ham", kCubicFile);
  auto a = run({"period", "--input", path});
  auto b = run({"period", "--input", path});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("T(h) = pi * ( 2 + 5/3 h + 385/72 h^2 + 85085/3888 h^3", 0) == 0);
  CHECK(a.out.find("A(h) = pi * ( 2 h + 5/6 h^2") != std::string::npos);

  auto ser = run({"period", "--input", path, "--serial", "--route", "reference"});
  CHECK(ser.out == a.out);

  auto m = run({"area", "--input", path, "--format", "machine", "--order", "8"});
  CHECK(m.status == 0);
  CHECK(parse_series_machine(m.out) ==
        expand_period(normalize(read_hamiltonian(kCubicFile).h, 8)).area_h.with_var("h"));

  std::string out_path = (std::filesystem::temp_directory_path() / "periodkit_test_out.txt").string();
  auto f = run({"period", "--input", path, "--out", out_path, "--decimals"});
  std::ifstream in(out_path);
  std::stringstream saved;
  saved << in.rdbuf();
  CHECK(saved.str() == f.out);
  CHECK(f.out.find("~ 6.2831853071795864769") != std::string::npos);

  // √3 stays symbolic
  std::string odd = temp_file("odd.ham", "term 2 0 3/2\nterm 0 2 1/2\nterm 4 0 9\norder 4\n");
  auto o = run({"period", "--input", odd});
  CHECK(o.status == 0);
  CHECK(o.out.rfind("T(h) = 1/sqrt(3) * pi * ( 2 ", 0) == 0);

  auto lin = run({"period", "--input", temp_file("lin.ham", "term 1 0 1\nterm 2 0 1/2\nterm 0 2 1/2\norder 4\n")});
  CHECK(lin.status == 1);
  CHECK(lin.err.find("linear term present") != std::string::npos);
  auto bad = run({"period", "--input", temp_file("bad.ham", "term 2 0 1/2\nwhat 3\norder 4\n")});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"period"}).status == 1);
  CHECK(run({"nonsense"}).status == 1);
  CHECK(run({}).status == 1);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("command line: abelian subcommands") {
  auto r = run({"abelian-reduce", "--k", "3"});
  CHECK(r.status == 0);
  CHECK(r.out == "I_3 = (6/11*h) I_0 + (12/11) I_1\n");
  auto rm = run({"abelian-reduce", "--k", "3", "--format", "machine"});
  CHECK(rm.out.find("p 1 6 11\n") != std::string::npos);
  CHECK(rm.out.find("q 0 12 11\n") != std::string::npos);

  auto ids = run({"abelian-identities", "--k", "4"});
  CHECK(ids.status == 0);
  CHECK(ids.out.find("FAIL") == std::string::npos);
  CHECK(ids.out.find("all_pass true") != std::string::npos);

  auto w = run({"abelian-wronskians", "--n", "12", "--order", "16"});
  CHECK(w.status == 0);
  CHECK(w.out.find("W_0(0) = -2\n") != std::string::npos);
  CHECK(w.out.find("W_7(0) = 2899871054080000/9\n") != std::string::npos);
  CHECK(w.out.find("all_nonzero true") != std::string::npos);
  CHECK(run({"abelian-wronskians", "--n", "12", "--order", "16", "--serial"}).out == w.out);
  auto short_order = run({"abelian-wronskians", "--n", "30", "--order", "4"});
  CHECK(short_order.status == 1);
  CHECK(short_order.err.find("insufficient series order") != std::string::npos);
}

TEST_CASE("command line: sturm-count and resultant") {
  auto s = run({"sturm-count", "--poly", "2x^2+2x-1", "--from", "0", "--to", "1/2"});
  CHECK(s.status == 0);
  CHECK(s.out == "1\n");
  CHECK(run({"sturm-count", "--poly", "x^2 - 2"}).out == "2\n");
  CHECK(run({"sturm-count", "--poly", "x^2 - 2", "--from", "0"}).out == "1\n");
  auto sm = run({"sturm-count", "--poly", "x^3 - x", "--from", "-2", "--to", "2", "--format", "machine"});
  CHECK(line_with(sm.out, "root_count") == "3");
  CHECK(run({"sturm-count", "--poly", "0"}).status == 1);
  CHECK(run({"sturm-count", "--poly", "x^2+"}).status == 1);

  auto r = run({"resultant", "--p", "2x + 4z + 3", "--q", "1/2 x + 1/2 z + 1/3 x^2 + 1/3 x z + 1/3 z^2"});
  CHECK(r.status == 0);
  UniPoly got = parse_unipoly(r.out.substr(std::string("Res_z = ").size()), 'x');
  CHECK(got == parse_unipoly("(2x + 3)(2x - 1)", 'x'));
}

TEST_CASE("command line: cheb-verify") {
  auto inc = run({"cheb-verify", "--target", "1+x+z", "--method", "resultant"});
  CHECK(inc.status == 2);
  CHECK(inc.out.find("verdict inconclusive") != std::string::npos);
  auto ok = run({"cheb-verify", "--target", "1+x+z"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("verdict nonvanishing") != std::string::npos);
  CHECK(run({"cheb-verify", "--target", "1+x+z", "--method", "parameterization", "--param", "conic"}).status == 0);
  CHECK(run({"cheb-verify", "--target", "x - 1/4"}).out.find("verdict vanishing") != std::string::npos);

  auto pair = run({"cheb-verify", "--f", "1", "--f", "x"});
  CHECK(pair.status == 0);
  CHECK(pair.out.find("ect true") != std::string::npos);
  auto none = run({"cheb-verify", "--f", "1", "--f", "x", "--param", "none"});
  CHECK(none.status == 2);
  CHECK(none.out.find("ect false") != std::string::npos);

  auto strict = run({"cheb-verify", "--f", "x^3", "--f", "x", "--f", "1", "--lift", "--mode", "strict"});
  CHECK(strict.status == 0);
  CHECK(strict.out.find("s 2\n") != std::string::npos);
  CHECK(strict.out.find("ct_system true") != std::string::npos);
  CHECK(strict.out.find("condition_strict false") != std::string::npos);
  CHECK(strict.out.find("condition_relaxed true") != std::string::npos);
  CHECK(strict.out.find("ect false") != std::string::npos);
  auto relaxed = run({"cheb-verify", "--f", "x^3", "--f", "x", "--f", "1", "--lift"});
  CHECK(relaxed.out.find("ect true") != std::string::npos);

  auto rf = run({"cheb-verify", "--f", "(1)/(1+x)"});
  CHECK(rf.status == 0);
  CHECK(run({"cheb-verify"}).status == 1);
  CHECK(run({"cheb-verify", "--potential", "x^3", "--f", "1"}).status == 1);
}

TEST_CASE("machine certificates can be replayed") {
  auto m = run({"cheb-verify", "--f", "x^3", "--f", "x", "--f", "1", "--lift", "--format", "machine"});
  REQUIRE(m.status == 0);
  std::istringstream in(m.out);
  int blocks = 0;
  std::string reduced, interval, count;
  for (std::string l; std::getline(in, l);) {
    if (l.rfind("reduced ", 0) == 0) reduced = l.substr(8);
    if (l.rfind("interval ", 0) == 0) interval = l.substr(9);
    if (l.rfind("root_count ", 0) == 0) count = l.substr(11);
    if (l == "end") {
      ++blocks;
      UniPoly p = parse_unipoly(reduced);
      std::istringstream iv(interval);
      std::string lo, hi;
      iv >> lo >> hi;
      // open interval with rational ends; the independent count needs a squarefree input
      UniPoly sf = squarefree_part(p);
      CHECK(oracle::descartes_count(sf.coeffs(), parse_rational(lo), parse_rational(hi)) == std::stoi(count));
    }
  }
  CHECK(blocks >= 6);
}
