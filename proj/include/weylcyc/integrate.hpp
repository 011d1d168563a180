#pragma once

#include <span>
#include <vector>

#include "weylcyc/rational.hpp"
#include "weylcyc/upoly.hpp"

namespace weylcyc {

// ∫ f over {0 < u_1 < ... < u_k < 1}.
Rational simplex_integrate(const UPoly& f, int k);

// Ordering chamber {0 = u_0 < u_{order[0]} < ... < u_{order[k-1]} < 1}.
class Region {
 public:
  explicit Region(std::vector<int> order);
  static Region standard(int k);
  // The chamber σ(Δ_k) = {0 < u_{σ⁻¹(1)} < ... < u_{σ⁻¹(k)}}; sigma[i-1] = σ(i).
  static Region from_permutation(std::span<const int> sigma);

  int dimension() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  // Position of u_i in the chamber ordering; u_0 has rank 0.
  int rank(int i) const { return rank_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<int> order_;
  std::vector<int> rank_;
};

// Factor b_1(u_j − u_i)^power, b_1 the 1-periodic extension of x − 1/2.
// Index 0 denotes u_0 = 0.
struct B1Factor {
  int i;
  int j;
  int power;
};

// Polynomial in chamber coordinates v_1 < ... < v_k (v_r = u_{order[r-1]})
// equal to Π b_1(u_j − u_i)^power on the chamber.
UPoly chamber_integrand(std::span<const B1Factor> factors, const Region& region);

Rational region_integrate(std::span<const B1Factor> factors, const UPoly& extra, const Region& region);
inline Rational region_integrate(std::span<const B1Factor> factors, const Region& region) {
  return region_integrate(factors, UPoly::constant(region.dimension(), 1), region);
}

// ∫ over [0,1]^k as a sum over the k! ordering chambers. k is capped.
Rational cube_integrate(std::span<const B1Factor> factors, int k);

// Closed cycle b_1(u_2−u_1) b_1(u_3−u_2) ... b_1(u_1−u_l) over [0,1]^l.
Rational cycle_weight(int l);

}  // namespace weylcyc
