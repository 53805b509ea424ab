#include "periodkit/poly_parse.hpp"

#include <cctype>
#include <string>

namespace periodkit {

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::pair<char, char> labels, bool uni_auto, int line)
      : s_(s), labels_(labels), uni_auto_(uni_auto), line_(line) {}

  BiPoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    BiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

  std::pair<char, char> labels() const { return labels_; }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  BiPoly zero() const { return BiPoly(labels_.first, labels_.second); }

  BiPoly expr() {
    BiPoly acc = zero();
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      BiPoly t = term();
      if (sign < 0) t = -t;
      acc += t;
      first = false;
      skip();
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  unsigned exponent() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  BiPoly maybe_power(BiPoly base) {
    if (peek('^')) {
      ++pos_;
      return base.pow(exponent());
    }
    return base;
  }

  BiPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return maybe_power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string text(s_.substr(start, pos_ - start));
      size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        text += "/" + std::string(s_.substr(ds, pos_ - ds));
      } else {
        pos_ = save;
      }
      Rational v;
      try {
        v = parse_rational(text);
      } catch (const ParseError&) {
        fail("malformed rational '" + text + "'");
      }
      return maybe_power(BiPoly(v, labels_));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      int slot = -1;
      if (c == labels_.first) {
        slot = 0;
      } else if (c == labels_.second) {
        slot = 1;
      } else if (uni_auto_ && !seen_var_) {
        labels_.first = c;
        slot = 0;
      }
      if (slot < 0) {
        --pos_;
        fail(std::string("unknown variable '") + c + "'");
      }
      if (uni_auto_ && slot == 1) {
        --pos_;
        fail(std::string("unknown variable '") + c + "'");
      }
      seen_var_ = true;
      BiPoly v = slot == 0 ? BiPoly::first_var(labels_) : BiPoly::second_var(labels_);
      return maybe_power(v);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::pair<char, char> labels_;
  bool uni_auto_;
  bool seen_var_ = false;
  int line_;
  size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text, std::pair<char, char> labels, int line) {
  Parser p(text, labels, false, line);
  return p.parse().with_labels(labels);
}

UniPoly parse_unipoly(std::string_view text, char var, int line) {
  // unused second slot: a character no input can contain
  Parser p(text, {var == 0 ? 'x' : var, '\x01'}, var == 0, line);
  BiPoly b = p.parse();
  char v = p.labels().first;
  return b.at_second(Rational(0)).with_var(v);
}

}  // namespace periodkit
