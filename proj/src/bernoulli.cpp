#include "weylcyc/bernoulli.hpp"

#include "weylcyc/errors.hpp"

namespace weylcyc {

UPoly bernoulli_poly(int j) {
  if (j < 0) throw InvalidArgument("bernoulli_poly: negative index");
  UPoly b = UPoly::constant(1, 1);
  for (int i = 1; i <= j; ++i) {
    UPoly next = (b * Rational(i)).antiderivative(1);
    const UPoly mean = next.antiderivative(1);
    const Rational avg = mean.evaluate({Rational(1)}) - mean.evaluate({Rational(0)});
    b = next - UPoly::constant(1, avg);
  }
  return b;
}

std::vector<Rational> bernoulli_numbers(int N) {
  if (N < 0) throw InvalidArgument("bernoulli_numbers: negative size");
  std::vector<Rational> out;
  UPoly b = UPoly::constant(1, 1);
  out.push_back(1);
  for (int i = 1; i <= N; ++i) {
    UPoly next = (b * Rational(i)).antiderivative(1);
    const UPoly mean = next.antiderivative(1);
    b = next - UPoly::constant(1, mean.evaluate({Rational(1)}));
    out.push_back(b.evaluate({Rational(0)}));
  }
  return out;
}

}  // namespace weylcyc
