#include "adeweyl/type_a.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adeweyl {

namespace {

void require_type_a(const CartanDatum& datum, const char* fn) {
  if (datum.series() != Series::A) {
    throw std::invalid_argument(std::string(fn) + " is defined for series A only");
  }
}

void require_dominant(const CartanDatum& datum, const Weight& w, const char* fn) {
  if (!datum.is_dominant(w)) {
    throw std::invalid_argument(std::string(fn) + " requires a dominant weight");
  }
}

// Walks every filling of the cells (i, j), i <= j, whose root sum is
// alpha.  Cells are scanned row by row; once row i is complete, the
// remaining demand at node i must be zero, which prunes most branches.
template <typename Visit>
void for_each_filling(const CartanDatum& datum, const RootElem& alpha,
                      const ComputeOptions& opts, Visit&& visit) {
  datum.check_root(alpha);
  if (!alpha.is_nonnegative()) {
    throw std::invalid_argument("alpha must lie in the nonnegative root cone Q+");
  }
  int n = datum.rank();
  std::vector<int64_t> remaining = alpha.coords();
  CLFilling filling;

  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == n) {
      charge_budget(opts);
      visit(const_cast<const CLFilling&>(filling));
      return;
    }
    if (j == n) {
      if (remaining[i] != 0) return;
      self(self, i + 1, i + 1);
      return;
    }
    charge_budget(opts);
    int64_t cap = remaining[i];
    for (int s = i; s <= j; ++s) cap = std::min(cap, remaining[s]);
    for (int64_t value = 0; value <= cap; ++value) {
      if (value > 0) {
        for (int s = i; s <= j; ++s) remaining[s] -= 1;
        filling.cells[{i, j}] = value;
      }
      self(self, i, j + 1);
    }
    if (cap > 0) {
      for (int s = i; s <= j; ++s) remaining[s] += cap;
      filling.cells.erase({i, j});
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<int64_t> weight_to_partition(const CartanDatum& datum,
                                         const Weight& lambda) {
  require_type_a(datum, "weight_to_partition");
  require_dominant(datum, lambda, "weight_to_partition");
  int n = datum.rank();
  std::vector<int64_t> parts(static_cast<size_t>(n) + 1, 0);
  int64_t suffix = 0;
  for (int r = n - 1; r >= 0; --r) {
    suffix += lambda[r];
    parts[r] = suffix;
  }
  return parts;
}

std::optional<std::vector<int64_t>> weight_to_content(const CartanDatum& datum,
                                                      const Weight& lambda,
                                                      const Weight& nu) {
  require_type_a(datum, "weight_to_content");
  require_dominant(datum, lambda, "weight_to_content");
  datum.check_weight(nu);
  int n = datum.rank();
  int64_t size = 0;
  for (int i = 0; i < n; ++i) size += (i + 1) * lambda[i];
  int64_t weighted = 0;
  for (int i = 0; i < n; ++i) weighted += (i + 1) * nu[i];
  // Content entries are c_r = shift + sum_{i >= r} nu_i with the shift
  // fixed by total size; it must come out a nonnegative integer.
  if ((size - weighted) % (n + 1) != 0) return std::nullopt;
  int64_t shift = (size - weighted) / (n + 1);
  std::vector<int64_t> content(static_cast<size_t>(n) + 1, shift);
  int64_t suffix = 0;
  for (int r = n - 1; r >= 0; --r) {
    suffix += nu[r];
    content[r] += suffix;
  }
  for (int64_t c : content) {
    if (c < 0) return std::nullopt;
  }
  return content;
}

int64_t CLFilling::at(int i, int j) const {
  auto it = cells.find({i, j});
  return it == cells.end() ? 0 : it->second;
}

std::string CLFilling::to_string() const {
  if (cells.empty()) return "{}";
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [cell, value] : cells) {
    if (!first) out << ", ";
    first = false;
    out << "l_" << cell.first + 1 << ',' << cell.second + 1 << '=' << value;
  }
  out << '}';
  return out.str();
}

std::vector<CLFilling> enumerate_S_alpha(const CartanDatum& datum,
                                         const RootElem& alpha,
                                         const ComputeOptions& opts) {
  require_type_a(datum, "enumerate_S_alpha");
  std::vector<CLFilling> out;
  for_each_filling(datum, alpha, opts,
                   [&](const CLFilling& filling) { out.push_back(filling); });
  return out;
}

LaurentPoly chari_loktev_polynomial(const CartanDatum& datum,
                                    const RootElem& alpha, const Weight& lambda,
                                    const ComputeOptions& opts) {
  require_type_a(datum, "chari_loktev_polynomial");
  require_dominant(datum, lambda, "chari_loktev_polynomial");
  int n = datum.rank();
  LaurentPoly total;
  for_each_filling(datum, alpha, opts, [&](const CLFilling& filling) {
    // Only the support cells need evaluating: whenever every supported
    // binomial is nonzero, each empty cell's top entry is nonnegative,
    // so its factor [top choose 0] is 1.
    LaurentPoly product = LaurentPoly::one();
    for (const auto& [cell, value] : filling.cells) {
      const auto& [i, j] = cell;
      int64_t top = lambda[i];
      for (int s = j + 1; s < n; ++s) {
        if (i + 1 < n) top += filling.at(i + 1, s);
        top -= filling.at(i, s);
      }
      if (top < value) {
        product = LaurentPoly();
        break;
      }
      product *= gauss_binomial(top, value);
    }
    if (!product.is_zero()) {
      total += product.substitute_power(2);
    }
  });
  return total;
}

Integer count_row_increasing_tableaux(const CartanDatum& datum,
                                      const RootElem& alpha,
                                      const Weight& lambda,
                                      const ComputeOptions& opts) {
  require_type_a(datum, "count_row_increasing_tableaux");
  require_dominant(datum, lambda, "count_row_increasing_tableaux");
  datum.check_root(alpha);
  if (!alpha.is_nonnegative()) {
    throw std::invalid_argument("alpha must lie in the nonnegative root cone Q+");
  }
  int letters = datum.rank() + 1;
  Weight nu = lambda - datum.root_to_weight(alpha);
  std::optional<std::vector<int64_t>> content = weight_to_content(datum, lambda, nu);
  if (!content.has_value()) return 0;

  // Row lengths of the transposed diagram.
  std::vector<int64_t> shape = weight_to_partition(datum, lambda);
  std::vector<int64_t> rows;
  for (int64_t r = 1; r <= (shape.empty() ? 0 : shape[0]); ++r) {
    int64_t len = 0;
    for (int64_t part : shape) len += (part >= r) ? 1 : 0;
    rows.push_back(len);
  }

  // Rows carry no mutual constraint, so fill them in order and track
  // how many of each letter remain.  Each row takes a strictly
  // increasing word, i.e. a subset of {1..n+1} of the row's length.
  std::map<std::vector<int64_t>, Integer> states;
  states[*content] = 1;
  for (int64_t len : rows) {
    std::map<std::vector<int64_t>, Integer> next;
    for (const auto& [remaining, count] : states) {
      std::vector<int64_t> scratch = remaining;
      auto choose = [&](auto&& self, int letter, int64_t needed) -> void {
        if (needed == 0) {
          charge_budget(opts);
          next[scratch] += count;
          return;
        }
        if (letters - letter + 1 < needed) return;
        for (int pick = letter; pick <= letters - needed + 1; ++pick) {
          if (scratch[pick - 1] == 0) continue;
          scratch[pick - 1] -= 1;
          self(self, pick + 1, needed - 1);
          scratch[pick - 1] += 1;
        }
      };
      choose(choose, 1, len);
    }
    states = std::move(next);
    if (states.empty()) return 0;
  }
  std::vector<int64_t> exhausted(static_cast<size_t>(letters), 0);
  auto it = states.find(exhausted);
  return it == states.end() ? Integer(0) : it->second;
}

Integer kostka_multiplicity(const CartanDatum& datum, const Weight& lambda,
                            const Weight& mu, const ComputeOptions& opts) {
  require_type_a(datum, "kostka_multiplicity");
  require_dominant(datum, lambda, "kostka_multiplicity");
  require_dominant(datum, mu, "kostka_multiplicity");
  std::optional<std::vector<int64_t>> content = weight_to_content(datum, lambda, mu);
  if (!content.has_value()) return 0;
  std::vector<int64_t> target = weight_to_partition(datum, lambda);

  // Semistandard tableaux counted letter by letter: placing the copies
  // of letter r grows the diagram by a horizontal strip.
  std::map<std::vector<int64_t>, Integer> states;
  states[std::vector<int64_t>(target.size(), 0)] = 1;
  for (size_t r = 0; r < content->size(); ++r) {
    int64_t boxes = (*content)[r];
    std::map<std::vector<int64_t>, Integer> next;
    for (const auto& [partial, count] : states) {
      std::vector<int64_t> grown = partial;
      auto place = [&](auto&& self, size_t row, int64_t left) -> void {
        if (row == target.size()) {
          if (left == 0) {
            charge_budget(opts);
            next[grown] += count;
          }
          return;
        }
        // Horizontal strip: stay within the target shape and do not
        // pass the previous row's old length.
        int64_t low = partial[row];
        int64_t high = std::min(target[row], row == 0 ? target[0] + left
                                                      : partial[row - 1]);
        for (int64_t v = low; v <= high && v - low <= left; ++v) {
          grown[row] = v;
          self(self, row + 1, left - (v - low));
        }
        grown[row] = partial[row];
      };
      place(place, 0, boxes);
    }
    states = std::move(next);
    if (states.empty()) return 0;
  }
  auto it = states.find(target);
  return it == states.end() ? Integer(0) : it->second;
}

}  // namespace adeweyl
