#include "adeweyl/quiver.hpp"

#include <stdexcept>

#include "adeweyl/chars.hpp"

namespace adeweyl {

namespace {

void check_inputs(const CartanDatum& datum, const RootElem& alpha,
                  const Weight& lambda) {
  datum.check_root(alpha);
  if (!datum.is_dominant(lambda)) {
    throw std::invalid_argument("quiver invariants require a dominant weight");
  }
  if (!alpha.is_nonnegative()) {
    throw std::invalid_argument("alpha must lie in the nonnegative root cone Q+");
  }
}

}  // namespace

int64_t dim_M(const CartanDatum& datum, const RootElem& alpha,
              const Weight& lambda) {
  check_inputs(datum, alpha, lambda);
  int64_t d = 2 * datum.pairing(lambda, alpha) - datum.pairing(alpha, alpha);
  if (d % 2 != 0) throw std::logic_error("dim M is odd");
  return d;
}

bool is_nonempty(const CartanDatum& datum, const RootElem& alpha,
                 const Weight& lambda, const ComputeOptions& opts) {
  check_inputs(datum, alpha, lambda);
  Weight nu = lambda - datum.root_to_weight(alpha);
  return weight_multiplicity(datum, lambda, nu, opts) > 0;
}

bool stratum_nonempty(const CartanDatum& datum, const RootElem& alpha,
                      const Weight& lambda) {
  check_inputs(datum, alpha, lambda);
  return datum.is_dominant(lambda - datum.root_to_weight(alpha));
}

int64_t dim_M0(const CartanDatum& datum, const Weight& lambda) {
  Weight minimal = lambda_min(datum, lambda);
  RootElem xi = *datum.to_root_element(lambda - minimal);
  return dim_M(datum, xi, lambda);
}

BettiVector betti(const CartanDatum& datum, const RootElem& alpha,
                  const GradedCharacter& character, const ComputeOptions& opts) {
  check_inputs(datum, alpha, character.lambda);
  BettiVector out;
  out.alpha = alpha;
  out.lambda = character.lambda;
  out.d = dim_M(datum, alpha, character.lambda);
  if (out.d >= 0) out.betti.assign(static_cast<size_t>(out.d) + 1, Integer(0));

  Weight nu = character.lambda - datum.root_to_weight(alpha);
  for (const auto& [degree, layer] : character.layers) {
    Integer dimension = 0;
    for (const auto& [mu, mult] : layer) {
      dimension += mult * weight_multiplicity(datum, mu, nu, opts);
    }
    if (dimension == 0) continue;
    int64_t index = out.d - 2 * degree;
    if (index < 0) {
      throw std::logic_error("weight space found below homological degree 0");
    }
    out.betti[static_cast<size_t>(index)] = dimension;
  }
  return out;
}

BettiVector betti(const CartanDatum& datum, const RootElem& alpha,
                  const Weight& lambda, const ComputeOptions& opts) {
  return betti(datum, alpha, graded_character(datum, lambda, opts), opts);
}

LaurentPoly poincare_polynomial(const CartanDatum& datum, const RootElem& alpha,
                                const GradedCharacter& character,
                                const ComputeOptions& opts) {
  BettiVector b = betti(datum, alpha, character, opts);
  LaurentPoly out;
  for (size_t j = 0; j < b.betti.size(); ++j) {
    if (b.betti[j] == 0) continue;
    out += LaurentPoly::monomial(b.betti[j], b.d - static_cast<int64_t>(j));
  }
  return out;
}

LaurentPoly poincare_polynomial(const CartanDatum& datum, const RootElem& alpha,
                                const Weight& lambda, const ComputeOptions& opts) {
  return poincare_polynomial(datum, alpha, graded_character(datum, lambda, opts),
                             opts);
}

LaurentPoly kl_polynomial(const CartanDatum& datum, const Weight& lambda,
                          const Weight& mu, const ComputeOptions& opts) {
  return graded_multiplicity(datum, lambda, mu, opts).substitute_power(2);
}

bool is_max_dim(const CartanDatum& datum, const RootElem& alpha,
                const Weight& lambda, const ComputeOptions& opts) {
  if (!is_nonempty(datum, alpha, lambda, opts)) {
    throw std::invalid_argument(
        "is_max_dim is undefined for an empty L(alpha, lambda)");
  }
  Weight nu = lambda - datum.root_to_weight(alpha);
  return datum.dominant_conjugate(nu) == lambda_min(datum, lambda);
}

}  // namespace adeweyl
