#include "weylcyc/integrate.hpp"

#include <algorithm>
#include <numeric>

#include "weylcyc/errors.hpp"
#include "weylcyc/limits.hpp"

namespace weylcyc {

// ∫ v^e over the ordered simplex is Π_i 1/(e_1 + .. + e_i + i).
Rational simplex_integrate(const UPoly& f, int k) {
  if (f.k() > k) throw DimensionMismatch("simplex_integrate: integrand has more variables than the simplex");
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    mpz_class den = 1;
    int partial = 0;
    for (int i = 0; i < k; ++i) {
      partial += e[i] + 1;
      den *= partial;
    }
    total += c / Rational(den);
  }
  return total;
}

Region::Region(std::vector<int> order) : order_(std::move(order)), rank_(order_.size() + 1, -1) {
  rank_[0] = 0;
  for (std::size_t r = 0; r < order_.size(); ++r) {
    const int v = order_[r];
    if (v < 1 || v > static_cast<int>(order_.size()) || rank_[v] != -1)
      throw InvalidArgument("malformed region: order must be a permutation of 1..k");
    rank_[v] = static_cast<int>(r) + 1;
  }
}

Region Region::standard(int k) {
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 1);
  return Region(std::move(order));
}

Region Region::from_permutation(std::span<const int> sigma) {
  std::vector<int> order(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const int s = sigma[i];
    if (s < 1 || s > static_cast<int>(sigma.size())) throw InvalidArgument("malformed permutation");
    order[static_cast<std::size_t>(s - 1)] = static_cast<int>(i) + 1;
  }
  return Region(std::move(order));
}

UPoly chamber_integrand(std::span<const B1Factor> factors, const Region& region) {
  const int k = region.dimension();
  UPoly f = UPoly::constant(k, 1);
  for (const auto& fac : factors) {
    if (fac.i < 0 || fac.j < 0 || fac.i > k || fac.j > k || fac.i == fac.j)
      throw InvalidArgument("b1 factor indices out of range");
    if (fac.power == 0) continue;
    const int ri = region.rank(fac.i), rj = region.rank(fac.j);
    UPoly lin(k);
    if (rj > 0) lin += UPoly::variable(k, rj);
    if (ri > 0) lin -= UPoly::variable(k, ri);
    // on the chamber, x = u_j − u_i lies in (0,1) or (−1,0)
    lin += UPoly::constant(k, ri < rj ? Rational(-1, 2) : Rational(1, 2));
    f = f * lin.pow(static_cast<unsigned>(fac.power));
  }
  return f;
}

Rational region_integrate(std::span<const B1Factor> factors, const UPoly& extra, const Region& region) {
  const int k = region.dimension();
  UPoly moved = extra;
  if (!extra.is_zero() && extra.k() > 0) {
    std::vector<UPoly> images;
    for (int i = 1; i <= extra.k(); ++i) images.push_back(UPoly::variable(k, region.rank(i)));
    moved = extra.compose(images);
  }
  return simplex_integrate(chamber_integrand(factors, region) * moved, k);
}

Rational cube_integrate(std::span<const B1Factor> factors, int k) {
  if (k > limits().chamber_cap)
    throw CapExceeded("cube integral over " + std::to_string(k) + " variables exceeds chamber cap " +
                      std::to_string(limits().chamber_cap));
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 1);
  Rational total = 0;
  do {
    total += region_integrate(factors, Region(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

Rational cycle_weight(int l) {
  if (l < 1) throw InvalidArgument("cycle length must be positive");
  std::vector<B1Factor> f;
  if (l == 1) return 0;  // b_1(0) = 0 up to a null set
  for (int i = 1; i <= l; ++i) f.push_back({i, i % l + 1, 1});
  return cube_integrate(f, l);
}

}  // namespace weylcyc
