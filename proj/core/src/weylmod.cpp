#include "adeweyl/weylmod.hpp"

#include <stdexcept>

#include "adeweyl/fermionic.hpp"

namespace adeweyl {

Weight lambda_min(const CartanDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda)) {
    throw std::invalid_argument("lambda_min requires a dominant weight");
  }
  // The candidates 0 and the minuscule fundamental weights represent
  // the classes of P modulo Q exactly once, so the answer is the single
  // candidate congruent to lambda.
  std::vector<Weight> candidates;
  candidates.push_back(datum.zero_weight());
  for (int node : datum.minuscule_nodes()) {
    candidates.push_back(datum.fundamental_weight(node));
  }
  for (const Weight& candidate : candidates) {
    std::optional<RootElem> diff = datum.to_root_element(lambda - candidate);
    if (!diff.has_value()) continue;
    if (!diff->is_nonnegative()) {
      throw std::logic_error("minimal dominant candidate not below lambda");
    }
    return candidate;
  }
  throw std::logic_error("no minuscule class representative found");
}

int64_t loewy_length(const CartanDatum& datum, const Weight& lambda) {
  Weight minimal = lambda_min(datum, lambda);
  RootElem xi = *datum.to_root_element(lambda - minimal);
  // (lambda, lambda) - (min, min) = 2 (lambda, xi) - (xi, xi), an even
  // nonnegative integer.
  int64_t norm_drop = 2 * datum.pairing(lambda, xi) - datum.pairing(xi, xi);
  if (norm_drop < 0 || norm_drop % 2 != 0) {
    throw std::logic_error("norm difference is not an even nonnegative integer");
  }
  return norm_drop / 2 + 1;
}

Weight socle(const CartanDatum& datum, const Weight& lambda) {
  return lambda_min(datum, lambda);
}

LaurentPoly graded_multiplicity(const CartanDatum& datum, const Weight& lambda,
                                const Weight& mu, const ComputeOptions& opts) {
  return fermionic_M(datum, lambda, mu, opts).substitute_power(-1);
}

int64_t GradedCharacter::top_degree() const {
  if (layers.empty()) throw std::logic_error("graded character has no layers");
  return layers.rbegin()->first;
}

Integer GradedCharacter::layer_dimension(const CartanDatum& datum,
                                         int64_t degree) const {
  Integer total = 0;
  auto it = layers.find(degree);
  if (it == layers.end()) return total;
  for (const auto& [mu, mult] : it->second) total += mult * dim_simple(datum, mu);
  return total;
}

Integer GradedCharacter::total_dimension(const CartanDatum& datum) const {
  Integer total = 0;
  for (const auto& [degree, layer] : layers) {
    for (const auto& [mu, mult] : layer) total += mult * dim_simple(datum, mu);
  }
  return total;
}

GradedCharacter graded_character(const CartanDatum& datum, const Weight& lambda,
                                 const ComputeOptions& opts) {
  if (!datum.is_dominant(lambda)) {
    throw std::invalid_argument("graded_character requires a dominant weight");
  }
  GradedCharacter out;
  out.lambda = lambda;
  for (const Weight& mu : datum.dominant_weights_below(lambda, opts.budget)) {
    LaurentPoly mult = graded_multiplicity(datum, lambda, mu, opts);
    for (const auto& [degree, coef] : mult.terms()) {
      out.layers[degree][mu] = coef;
    }
  }

  // Structural laws: layer 0 is {lambda: 1}, the top layer is
  // {lambda_min: 1}, and the layer count is the Loewy length.
  std::map<Weight, Integer> expected_bottom{{lambda, Integer(1)}};
  std::map<Weight, Integer> expected_top{{lambda_min(datum, lambda), Integer(1)}};
  int64_t length = loewy_length(datum, lambda);
  auto bottom = out.layers.find(0);
  if (bottom == out.layers.end() || bottom->second != expected_bottom ||
      out.layers.begin()->first != 0) {
    throw std::logic_error("graded character layer 0 is not {lambda: 1}");
  }
  if (out.layers.rbegin()->second != expected_top) {
    throw std::logic_error("graded character top layer is not {lambda_min: 1}");
  }
  if (out.top_degree() != length - 1 ||
      static_cast<int64_t>(out.layers.size()) != length) {
    throw std::logic_error("graded character layer count differs from Loewy length");
  }
  return out;
}

LoewyReport loewy_report(const CartanDatum& datum, const Weight& lambda,
                         const ComputeOptions& opts) {
  LoewyReport report;
  report.character = graded_character(datum, lambda, opts);
  report.lambda_min = lambda_min(datum, lambda);
  report.loewy_length = loewy_length(datum, lambda);
  report.top_degree = report.character.top_degree();
  report.dimension = report.character.total_dimension(datum);
  return report;
}

}  // namespace adeweyl
