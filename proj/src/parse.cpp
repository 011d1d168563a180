#include "weylcyc/parse.hpp"

#include <cctype>

#include "weylcyc/errors.hpp"

namespace weylcyc {

namespace {

class Parser {
 public:
  Parser(std::string_view s, int n) : s_(s), n_(n) {
    if (n < 1 || n > kMaxRank) throw InvalidArgument("rank n out of range");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    std::string near = pos_ < s_.size() ? std::string(" near '") + s_[pos_] + "'" : " at end of input";
    throw ParseError(msg + near, pos_);
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Rational number() {
    Rational num(integer());
    // a/b only when a digit follows the slash
    std::size_t save = pos_;
    if (accept('/')) {
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
        fail("expected a denominator");
      }
      const std::size_t at = pos_;
      mpz_class den = integer();
      if (den == 0) throw ParseError("zero denominator", at);
      num /= Rational(den);
    }
    return num;
  }

  // expr := term (('+'|'-') term)*
  WeylPoly expr() {
    WeylPoly r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  // term := factor ('*' factor)*
  WeylPoly term() {
    WeylPoly r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  // factor := ('-'|'+') factor | power
  WeylPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  // power := atom ('^' integer)?
  WeylPoly power() {
    WeylPoly base = atom();
    if (accept('^')) {
      const std::size_t at = pos_;
      mpz_class e = integer();
      if (e > 64) throw ParseError("exponent too large", at);
      WeylPoly r = WeylPoly::constant(n_, 1);
      for (long i = 0; i < e.get_si(); ++i) r = r * base;
      return r;
    }
    return base;
  }

  WeylPoly atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      WeylPoly r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return WeylPoly::constant(n_, number());
    if (c == 'p' || c == 'q' || c == 'y') {
      const std::size_t at = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(pos_ < s_.size() ? s_[pos_] : '\0'))) fail("expected a variable index");
      const mpz_class idx = integer();
      const long limit = c == 'y' ? 2 * n_ : n_;
      if (idx < 1 || idx > limit)
        throw ParseError(std::string("variable ") + c + idx.get_str() + " out of range for n=" + std::to_string(n_), at);
      const int i = static_cast<int>(idx.get_si());
      if (c == 'p') return WeylPoly::p(n_, i);
      if (c == 'q') return WeylPoly::q(n_, i);
      return WeylPoly::variable(n_, i);
    }
    fail("expected a polynomial term");
  }

  MatrixElement matrix(int r) {
    if (peek() != '{') return MatrixElement::scalar(expr(), r);
    expect('{');
    MatrixElement m(n_, r);
    for (int i = 0; i < r; ++i) {
      if (i) expect(',');
      expect('{');
      for (int j = 0; j < r; ++j) {
        if (j) expect(',');
        m.at(i, j) = expr();
      }
      expect('}');
    }
    expect('}');
    return m;
  }

  template <class E, class Entry>
  Chain<E> chain(Entry entry) {
    Chain<E> out;
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (accept('-')) {
        sign = -1;
      } else if (!accept('+') && !first) {
        fail("expected '+' or '-' between chain terms");
      }
      first = false;
      Rational coef = 1;
      if (peek() != '[') {
        coef = number();
        accept('*');
      }
      expect('[');
      ChainWord<E> w{entry()};
      while (accept(';')) w.push_back(entry());
      expect(']');
      if (out.length() != 0 && out.length() != w.size()) fail("chain words must have equal length");
      out.add(std::move(w), sign * coef);
    }
    if (first) fail("empty chain");
    return out;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;
};

}  // namespace

WeylPoly parse_poly(std::string_view text, int n) {
  Parser p(text, n);
  WeylPoly r = p.expr();
  if (!p.at_end()) p.fail("trailing input");
  return r;
}

MatrixElement parse_matrix(std::string_view text, int n, int r) {
  Parser p(text, n);
  MatrixElement m = p.matrix(r);
  if (!p.at_end()) p.fail("trailing input");
  return m;
}

Chain<WeylPoly> parse_chain(std::string_view text, int n) {
  Parser p(text, n);
  return p.chain<WeylPoly>([&] { return p.expr(); });
}

Chain<MatrixElement> parse_matrix_chain(std::string_view text, int n, int r) {
  Parser p(text, n);
  return p.chain<MatrixElement>([&] { return p.matrix(r); });
}

}  // namespace weylcyc
