#include "weylcyc/rational.hpp"

#include "weylcyc/errors.hpp"

namespace weylcyc {

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw InvalidArgument("not a rational literal: '" + s + "'");
  }
  if (r.get_den() == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return Rational(f);
}

}  // namespace weylcyc
