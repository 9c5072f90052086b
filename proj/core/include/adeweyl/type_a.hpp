#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adeweyl/budget.hpp"
#include "adeweyl/cartan.hpp"
#include "adeweyl/laurent.hpp"

namespace adeweyl {

// Type A only: independent combinatorial routes to the same graded
// data, used to cross-check the fermionic computation.  All functions
// here reject non-A series.

// Partition attached to a dominant weight of A_n: part r is
// sum_{i >= r} <h_i, lambda>, on n+1 coordinates (the last is 0).
std::vector<int64_t> weight_to_partition(const CartanDatum& datum,
                                         const Weight& lambda);

// Content counts (c_1, ..., c_{n+1}) of the weight nu relative to
// lambda: nonnegative integers with sum |lambda| whose consecutive
// differences recover nu.  nullopt when nu admits no such composition.
std::optional<std::vector<int64_t>> weight_to_content(const CartanDatum& datum,
                                                      const Weight& lambda,
                                                      const Weight& nu);

// A solution of sum l_{i,j} alpha_{i,j} = alpha, where alpha_{i,j} =
// alpha_i + ... + alpha_j; cells are 0-based pairs (i, j) with
// i <= j and only nonzero entries are stored.
struct CLFilling {
  std::map<std::pair<int, int>, int64_t> cells;

  int64_t at(int i, int j) const;
  auto operator<=>(const CLFilling&) const = default;
  std::string to_string() const;  // e.g. "{l_1,2=1}" (1-based)
};

// All solutions, cells scanned in lexicographic order with values
// ascending, so the output order is deterministic.
std::vector<CLFilling> enumerate_S_alpha(const CartanDatum& datum,
                                         const RootElem& alpha,
                                         const ComputeOptions& opts = {});

// Graded Poincare polynomial of L(alpha, lambda) in type A:
//   sum over fillings of prod_{i <= j}
//     [<h_i, lambda> + sum_{s > j} l_{i+1, s} - sum_{s > j} l_{i, s}
//      choose l_{i,j}]_{t^2},
// with l_{n+1, s} read as 0.  Matches poincare_polynomial exactly.
LaurentPoly chari_loktev_polynomial(const CartanDatum& datum,
                                    const RootElem& alpha, const Weight& lambda,
                                    const ComputeOptions& opts = {});

// Number of fillings of the transposed Young diagram of lambda with
// letters 1..n+1, strictly increasing along rows (no column condition),
// using each letter r exactly content(lambda - alpha)_r times.  Equals
// the total Betti number sum of L(alpha, lambda).
Integer count_row_increasing_tableaux(const CartanDatum& datum,
                                      const RootElem& alpha,
                                      const Weight& lambda,
                                      const ComputeOptions& opts = {});

// Kostka number: semistandard tableaux of shape lambda and content mu,
// counted by the horizontal-strip recursion.  Both weights dominant.
// Equals weight_multiplicity(lambda, mu) in type A.
Integer kostka_multiplicity(const CartanDatum& datum, const Weight& lambda,
                            const Weight& mu, const ComputeOptions& opts = {});

}  // namespace adeweyl
