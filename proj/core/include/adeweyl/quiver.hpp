#pragma once

#include <cstdint>
#include <vector>

#include "adeweyl/budget.hpp"
#include "adeweyl/cartan.hpp"
#include "adeweyl/laurent.hpp"
#include "adeweyl/weylmod.hpp"

namespace adeweyl {

// Numerical invariants of the quiver varieties M(alpha, lambda) and
// their Lagrangian subvarieties L(alpha, lambda) attached to a
// dominant weight lambda and alpha in Q+.  Everything here is computed
// through exact representation theory; no geometry is constructed.

// dim M(alpha, lambda) = 2 (lambda, alpha) - (alpha, alpha)
//   = (lambda, lambda) - (lambda - alpha, lambda - alpha).
// Always even; may be negative when the variety is empty.
int64_t dim_M(const CartanDatum& datum, const RootElem& alpha,
              const Weight& lambda);

// L(alpha, lambda) is nonempty exactly when lambda - alpha is a weight
// of V(lambda).
bool is_nonempty(const CartanDatum& datum, const RootElem& alpha,
                 const Weight& lambda, const ComputeOptions& opts = {});

// The open stratum of M0(alpha, lambda) is nonempty exactly when
// lambda - alpha is dominant.
bool stratum_nonempty(const CartanDatum& datum, const RootElem& alpha,
                      const Weight& lambda);

// dim M0(lambda) = (lambda, lambda) - (lambda_min, lambda_min), the
// dimension at the largest stratum; equals 2 * (loewy_length - 1).
int64_t dim_M0(const CartanDatum& datum, const Weight& lambda);

// Betti numbers of L(alpha, lambda): homology is concentrated in even
// degrees, b_{d - 2k} = dim of the lambda-alpha weight space of the
// k-th graded layer of W(lambda).  The zero vector exactly when
// L(alpha, lambda) is empty (d is still reported; betti is empty when
// d < 0).
struct BettiVector {
  RootElem alpha;
  Weight lambda;
  int64_t d = 0;                // dim M(alpha, lambda)
  std::vector<Integer> betti;   // betti[j] = b_j, j = 0..d
};

BettiVector betti(const CartanDatum& datum, const RootElem& alpha,
                  const Weight& lambda, const ComputeOptions& opts = {});
// Same, reusing a precomputed graded character of W(lambda).
BettiVector betti(const CartanDatum& datum, const RootElem& alpha,
                  const GradedCharacter& character,
                  const ComputeOptions& opts = {});

// Poincare polynomial sum_j b_j t^{d-j}; only even powers occur.
LaurentPoly poincare_polynomial(const CartanDatum& datum, const RootElem& alpha,
                                const Weight& lambda,
                                const ComputeOptions& opts = {});
LaurentPoly poincare_polynomial(const CartanDatum& datum, const RootElem& alpha,
                                const GradedCharacter& character,
                                const ComputeOptions& opts = {});

// Kazhdan-Lusztig type polynomial Z_{lambda mu}(t): the fermionic form
// evaluated at t^{-2}.  Z_{lambda lambda} = 1.
LaurentPoly kl_polynomial(const CartanDatum& datum, const Weight& lambda,
                          const Weight& mu, const ComputeOptions& opts = {});

// Whether the stratum of alpha realizes the dimension of M0(lambda),
// i.e. the dominant conjugate of lambda - alpha equals lambda_min.
// Requires a nonempty L(alpha, lambda).
bool is_max_dim(const CartanDatum& datum, const RootElem& alpha,
                const Weight& lambda, const ComputeOptions& opts = {});

}  // namespace adeweyl
