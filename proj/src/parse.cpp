#include "hopflab/parse.hpp"

#include <cctype>
#include <string>

namespace hopf {

namespace {

template <class F>
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Surd<F> run() {
    Surd<F> v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw UsageError("cannot parse '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Surd<F> expr() {
    Surd<F> v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  Surd<F> term() {
    Surd<F> v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        Surd<F> d = unary();
        if (d.is_zero()) throw DomainError("zero denominator in '" + std::string(s_) + "'");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Surd<F> unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    Surd<F> b = primary();
    if (eat('^')) {
      skip();
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(st, i_ - st)));
      Surd<F> r(1);
      for (int k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }
  Surd<F> primary() {
    skip();
    if (eat('(')) {
      Surd<F> v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) {
      size_t st = i_;
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
      return Surd<F>(Rational::parse(s_.substr(st, i_ - st)));
    }
    if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string id(s_.substr(st, i_ - st));
      if (id == "sqrt") {
        if (!eat('(')) fail("expected '(' after sqrt");
        Surd<F> v = expr();
        if (!eat(')')) fail("expected ')'");
        return adjoin_sqrt(v);
      }
      if constexpr (std::is_same_v<F, RatFunc>) {
        if (id == "t") return Surd<F>(RatFunc::variable(Var::t));
        if (id == "kappa2") return Surd<F>(RatFunc::variable(Var::kappa2));
        if (id == "kappa") return Surd<F>(RatFunc::variable(Var::kappa));
      }
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected end of input");
  }

  std::string_view s_;
  size_t i_ = 0;
};

}  // namespace

RadicalScalar parse_radical(std::string_view text) { return Parser<Rational>(text).run(); }
SymbolicScalar parse_symbolic(std::string_view text) { return Parser<RatFunc>(text).run(); }

}  // namespace hopf
