#include "adeweyl/fermionic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adeweyl {

namespace {

// One partition stored as (part, count) pairs with parts ascending.
using Modes = std::vector<std::pair<int64_t, int64_t>>;

void partitions_of(int64_t n, const ComputeOptions& opts, std::vector<Modes>& out) {
  Modes prefix;
  // Parts are chosen ascending, so each partition is emitted once, in
  // lexicographic order of its ascending part list.
  auto rec = [&](auto&& self, int64_t remaining, int64_t min_part) -> void {
    if (remaining == 0) {
      charge_budget(opts);
      out.push_back(prefix);
      return;
    }
    for (int64_t part = min_part; part <= remaining; ++part) {
      if (!prefix.empty() && prefix.back().first == part) {
        ++prefix.back().second;
      } else {
        prefix.emplace_back(part, 1);
      }
      self(self, remaining - part, part);
      if (prefix.back().second == 1) {
        prefix.pop_back();
      } else {
        --prefix.back().second;
      }
    }
  };
  rec(rec, n, 1);
}

// Sum_l min(k, l) * m_l over one node's modes.
int64_t capped_sum(const Modes& modes, int64_t k) {
  int64_t total = 0;
  for (const auto& [part, count] : modes) total += std::min(k, part) * count;
  return total;
}

struct SumContext {
  const CartanDatum& datum;
  const Weight& lambda;
  const ComputeOptions& opts;
  // Partitions available at each node, and the current choice.
  std::vector<std::vector<Modes>> per_node;
  std::vector<const Modes*> chosen;
  // Nodes whose vacancies are final once node j is assigned: node i is
  // listed under the largest index among i and its neighbors.
  std::vector<std::vector<int>> finalize_at;

  int64_t vacancy_at(int node, int64_t k) const {
    const auto& cartan = datum.cartan();
    int64_t p = lambda[node];
    for (int j = 0; j < datum.rank(); ++j) {
      if (cartan[node][j] == 0 || chosen[j] == nullptr) continue;
      p -= cartan[node][j] * capped_sum(*chosen[j], k);
    }
    return p;
  }

  ModeSequence assemble() const {
    ModeSequence m;
    for (int i = 0; i < datum.rank(); ++i) {
      for (const auto& [part, count] : *chosen[i]) {
        m.counts[{i, part}] = count;
      }
    }
    return m;
  }
};

bool prepare_context(SumContext& ctx, const Weight& mu) {
  const CartanDatum& d = ctx.datum;
  if (!d.is_dominant(ctx.lambda) || !d.is_dominant(mu)) {
    throw std::invalid_argument("fermionic form requires dominant weights");
  }
  std::optional<RootElem> diff = d.to_root_element(ctx.lambda - mu);
  if (!diff.has_value() || !diff->is_nonnegative()) return false;

  ctx.per_node.resize(d.rank());
  ctx.chosen.assign(d.rank(), nullptr);
  ctx.finalize_at.resize(d.rank());
  for (int i = 0; i < d.rank(); ++i) {
    partitions_of((*diff)[i], ctx.opts, ctx.per_node[i]);
    int ready = i;
    for (auto [a, b] : d.edges()) {
      if (a == i) ready = std::max(ready, b);
      if (b == i) ready = std::max(ready, a);
    }
    ctx.finalize_at[ready].push_back(i);
  }
  return true;
}

}  // namespace

int64_t ModeSequence::count(int node, int64_t k) const {
  auto it = counts.find({node, k});
  return it == counts.end() ? 0 : it->second;
}

std::string ModeSequence::to_string() const {
  if (counts.empty()) return "{}";
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [key, value] : counts) {
    if (!first) out << ", ";
    first = false;
    out << "m_" << key.second << "^(" << key.first + 1 << ")=" << value;
  }
  out << '}';
  return out.str();
}

std::vector<ModeSequence> enumerate_S(const CartanDatum& datum,
                                      const Weight& lambda, const Weight& mu,
                                      const ComputeOptions& opts) {
  SumContext ctx{datum, lambda, opts};
  std::vector<ModeSequence> out;
  if (!prepare_context(ctx, mu)) return out;

  auto rec = [&](auto&& self, int node) -> void {
    if (node == datum.rank()) {
      charge_budget(opts);
      out.push_back(ctx.assemble());
      return;
    }
    for (const Modes& modes : ctx.per_node[node]) {
      ctx.chosen[node] = &modes;
      self(self, node + 1);
    }
    ctx.chosen[node] = nullptr;
  };
  rec(rec, 0);
  return out;
}

int64_t vacancy(const CartanDatum& datum, const ModeSequence& m,
                const Weight& lambda, int node, int64_t k) {
  datum.check_weight(lambda);
  if (node < 0 || node >= datum.rank()) {
    throw std::invalid_argument("node index out of range");
  }
  if (k < 1) throw std::invalid_argument("mode index must be >= 1");
  const auto& cartan = datum.cartan();
  int64_t p = lambda[node];
  for (const auto& [key, count] : m.counts) {
    const auto& [j, l] = key;
    if (cartan[node][j] == 0) continue;
    p -= cartan[node][j] * std::min(k, l) * count;
  }
  return p;
}

int64_t charge(const CartanDatum& datum, const ModeSequence& m,
               const Weight& lambda) {
  datum.check_weight(lambda);
  const auto& cartan = datum.cartan();
  int64_t double_quadratic = 0;
  int64_t linear = 0;
  for (const auto& [key_a, count_a] : m.counts) {
    const auto& [i, k] = key_a;
    linear += lambda[i] * count_a;
    for (const auto& [key_b, count_b] : m.counts) {
      const auto& [j, l] = key_b;
      if (cartan[i][j] == 0) continue;
      double_quadratic += cartan[i][j] * std::min(k, l) * count_a * count_b;
    }
  }
  if (double_quadratic % 2 != 0) {
    throw std::logic_error("charge half-sum is not an integer");
  }
  return double_quadratic / 2 - linear;
}

LaurentPoly fermionic_M(const CartanDatum& datum, const Weight& lambda,
                        const Weight& mu, const ComputeOptions& opts) {
  SumContext ctx{datum, lambda, opts};
  LaurentPoly total;
  if (!prepare_context(ctx, mu)) return total;

  // Depth-first over per-node partitions.  A node's vacancies are final
  // once its last neighbor is assigned, so dead branches (a supported
  // mode with negative vacancy forces a zero binomial) are cut early.
  auto rec = [&](auto&& self, int node, LaurentPoly acc) -> void {
    if (node == datum.rank()) {
      charge_budget(opts);
      int64_t c = charge(datum, ctx.assemble(), lambda);
      total += acc * LaurentPoly::monomial(1, c);
      return;
    }
    for (const Modes& modes : ctx.per_node[node]) {
      charge_budget(opts);
      ctx.chosen[node] = &modes;
      LaurentPoly extended = acc;
      bool dead = false;
      for (int ready : ctx.finalize_at[node]) {
        for (const auto& [part, count] : *ctx.chosen[ready]) {
          int64_t p = ctx.vacancy_at(ready, part);
          if (p < 0) {
            dead = true;
            break;
          }
          extended *= gauss_binomial(p + count, count);
        }
        if (dead) break;
      }
      if (!dead) self(self, node + 1, std::move(extended));
    }
    ctx.chosen[node] = nullptr;
  };
  rec(rec, 0, LaurentPoly::one());

  for (const auto& [exp, coef] : total.terms()) {
    if (exp > 0 || coef < 0) {
      throw std::logic_error(
          "fermionic form violated its sign contract (term " + coef.str() +
          "*t^" + std::to_string(exp) + ")");
    }
  }
  if (lambda == mu && !(total == LaurentPoly::one())) {
    throw std::logic_error("fermionic form normalization M(lambda, lambda) != 1");
  }
  return total;
}

}  // namespace adeweyl
