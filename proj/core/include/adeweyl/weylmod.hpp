#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "adeweyl/budget.hpp"
#include "adeweyl/cartan.hpp"
#include "adeweyl/chars.hpp"
#include "adeweyl/laurent.hpp"

namespace adeweyl {

// The unique minimal element of {mu dominant : mu <= lambda}: the zero
// weight or a minuscule fundamental weight, determined by the class of
// lambda in the weight lattice modulo the root lattice.
Weight lambda_min(const CartanDatum& datum, const Weight& lambda);

// Loewy length of the Weyl module W(lambda):
//   (1/2) ((lambda, lambda) - (lambda_min, lambda_min)) + 1.
int64_t loewy_length(const CartanDatum& datum, const Weight& lambda);

// Socle of W(lambda), the simple module V(lambda_min).
Weight socle(const CartanDatum& datum, const Weight& lambda);

// Multiplicity of V(mu) across the graded layers of W(lambda) as a
// polynomial in t with nonnegative coefficients: the fermionic form
// evaluated at t^{-1}.
LaurentPoly graded_multiplicity(const CartanDatum& datum, const Weight& lambda,
                                const Weight& mu, const ComputeOptions& opts = {});

// Semisimple layers of W(lambda): layers[k][mu] is the multiplicity of
// V(mu) in the k-th graded piece.  Layer 0 is {lambda: 1}, the top
// layer is {lambda_min: 1}, and the number of layers is the Loewy
// length; construction verifies all three.
struct GradedCharacter {
  Weight lambda;
  std::map<int64_t, std::map<Weight, Integer>> layers;

  int64_t top_degree() const;
  int64_t layer_count() const { return static_cast<int64_t>(layers.size()); }
  // Dimension of the graded piece in degree k.
  Integer layer_dimension(const CartanDatum& datum, int64_t degree) const;
  // Total dimension sum_k dim W(lambda)_k.
  Integer total_dimension(const CartanDatum& datum) const;
};

GradedCharacter graded_character(const CartanDatum& datum, const Weight& lambda,
                                 const ComputeOptions& opts = {});

// Summary of the radical/socle structure: for these modules the graded
// layers and the Loewy layers coincide.
struct LoewyReport {
  GradedCharacter character;
  Weight lambda_min;
  int64_t loewy_length = 0;
  int64_t top_degree = 0;
  Integer dimension;
};

LoewyReport loewy_report(const CartanDatum& datum, const Weight& lambda,
                         const ComputeOptions& opts = {});

}  // namespace adeweyl
