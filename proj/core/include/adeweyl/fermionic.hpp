#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adeweyl/budget.hpp"
#include "adeweyl/cartan.hpp"
#include "adeweyl/laurent.hpp"

namespace adeweyl {

// A finitely supported family m_k^{(i)} of nonnegative integers indexed
// by node i (0-based) and mode k >= 1; only nonzero entries are stored.
// Per node the modes form a partition of n_i = sum_k k * m_k^{(i)}.
struct ModeSequence {
  std::map<std::pair<int, int64_t>, int64_t> counts;

  int64_t count(int node, int64_t k) const;
  bool empty() const { return counts.empty(); }
  std::string to_string() const;  // e.g. "{m_1^(1)=2, m_2^(2)=1}" (1-based)

  auto operator<=>(const ModeSequence&) const = default;
};

// All mode sequences m with sum_{i,k} k * m_k^{(i)} alpha_i = lambda - mu,
// i.e. one partition per node of the root coordinates of lambda - mu.
// Empty when lambda - mu is not a nonnegative element of the root
// lattice.  The order is deterministic: per node, partitions are listed
// with parts ascending, smallest-part-first sequences first.
std::vector<ModeSequence> enumerate_S(const CartanDatum& datum,
                                      const Weight& lambda, const Weight& mu,
                                      const ComputeOptions& opts = {});

// Vacancy number p_k^{(i)}(m, lambda)
//   = <h_i, lambda> - sum_j (alpha_i, alpha_j) sum_l min(k, l) m_l^{(j)}.
int64_t vacancy(const CartanDatum& datum, const ModeSequence& m,
                const Weight& lambda, int node, int64_t k);

// Charge c(m, lambda) = (1/2) sum_{i,j} (alpha_i, alpha_j)
//   sum_{k,l} min(k,l) m_k^{(i)} m_l^{(j)} - sum_{i,k} <h_i,lambda> m_k^{(i)}.
// The half-sum is always integral; a failure here is an internal error.
int64_t charge(const CartanDatum& datum, const ModeSequence& m,
               const Weight& lambda);

// Fermionic form
//   M(lambda, mu, t) = sum_{m in S} t^{c(m,lambda)}
//       prod_{(i,k) in supp(m)} [p_k^{(i)} + m_k^{(i)} choose m_k^{(i)}]_t.
// The product runs over the support of m: entries with m_k^{(i)} = 0
// contribute the factor 1.  The result is a polynomial in t^{-1} with
// nonnegative coefficients and M(lambda, lambda) = 1; both facts are
// checked and violations raise std::logic_error.
LaurentPoly fermionic_M(const CartanDatum& datum, const Weight& lambda,
                        const Weight& mu, const ComputeOptions& opts = {});

}  // namespace adeweyl
