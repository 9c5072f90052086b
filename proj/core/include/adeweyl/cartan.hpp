#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adeweyl/budget.hpp"
#include "adeweyl/numeric.hpp"

namespace adeweyl {

// Simply laced series.  Ranks: A requires n >= 1, D requires n >= 4,
// E requires n in {6, 7, 8}.
enum class Series : char { A = 'A', D = 'D', E = 'E' };

char series_letter(Series s);
Series series_from_letter(char letter);  // throws std::invalid_argument

// Integral weight written in the basis of fundamental weights, so
// coords()[i] = <h_i, w>.  Node indices are 0-based throughout the API;
// they refer to Bourbaki numbering shifted down by one.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int64_t> coords) : coords_(std::move(coords)) {}

  size_t size() const { return coords_.size(); }
  int64_t operator[](size_t i) const { return coords_[i]; }
  const std::vector<int64_t>& coords() const { return coords_; }

  bool is_zero() const;
  std::string to_string() const;  // e.g. "[2,0]"

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  auto operator<=>(const Weight&) const = default;

 private:
  std::vector<int64_t> coords_;
};

// Element of the root lattice written in the basis of simple roots.
class RootElem {
 public:
  RootElem() = default;
  explicit RootElem(std::vector<int64_t> coords) : coords_(std::move(coords)) {}

  size_t size() const { return coords_.size(); }
  int64_t operator[](size_t i) const { return coords_[i]; }
  const std::vector<int64_t>& coords() const { return coords_; }

  // True when the element lies in the nonnegative cone Q+.
  bool is_nonnegative() const;
  int64_t height() const;  // sum of coordinates
  bool is_zero() const;
  std::string to_string() const;

  friend RootElem operator+(const RootElem& a, const RootElem& b);
  friend RootElem operator-(const RootElem& a, const RootElem& b);
  auto operator<=>(const RootElem&) const = default;

 private:
  std::vector<int64_t> coords_;
};

// Root system data for one simply laced type, normalized so every root
// has squared length 2.  Construction computes the Cartan matrix, its
// exact rational inverse, and the full list of positive roots.
class CartanDatum {
 public:
  CartanDatum(Series series, int rank);  // throws std::invalid_argument

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;  // e.g. "A2", "E6"

  const std::vector<std::vector<int64_t>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rational>>& cartan_inverse() const {
    return cartan_inv_;
  }
  // Edges of the Dynkin diagram as 0-based node pairs (i < j).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Positive roots in simple-root coordinates, sorted by height then
  // lexicographically.
  const std::vector<RootElem>& positive_roots() const { return positive_roots_; }
  // 0-based nodes i with omega_i minuscule.
  const std::vector<int>& minuscule_nodes() const { return minuscule_nodes_; }

  Weight zero_weight() const;
  Weight fundamental_weight(int i) const;
  Weight rho() const;  // all coordinates 1

  bool is_dominant(const Weight& w) const;
  void check_weight(const Weight& w) const;    // size must equal rank
  void check_root(const RootElem& a) const;

  // Symmetric invariant form; (omega_i, alpha_j) = delta_ij and
  // (alpha, alpha) = 2 for every root.  Computed as x^T C^{-1} y on
  // fundamental-weight coordinates.
  Rational pairing(const Weight& x, const Weight& y) const;
  // (x, a) for a in the root lattice is always an integer.
  int64_t pairing(const Weight& x, const RootElem& a) const;
  // a^T C b, again an integer.
  int64_t pairing(const RootElem& a, const RootElem& b) const;

  // Exact coordinates of a weight in the simple-root basis.
  std::vector<Rational> weight_to_root_coords(const Weight& w) const;
  // Same, but only when all coordinates are integers (w in the root
  // lattice); nullopt otherwise.
  std::optional<RootElem> to_root_element(const Weight& w) const;
  Weight root_to_weight(const RootElem& a) const;

  Weight simple_reflection(int i, const Weight& w) const;
  // Unique dominant element of the Weyl orbit of w.
  Weight dominant_conjugate(const Weight& w) const;
  // Full Weyl orbit, sorted.  Intended for small ranks.
  std::vector<Weight> weyl_orbit(const Weight& w, const Budget* budget = nullptr) const;

  // All dominant mu with lambda - mu in Q+, sorted by height of
  // lambda - mu, then lexicographically.  lambda must be dominant.
  std::vector<Weight> dominant_weights_below(const Weight& lambda,
                                             const Budget* budget = nullptr) const;

 private:
  Series series_;
  int rank_;
  std::vector<std::vector<int64_t>> cartan_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<RootElem> positive_roots_;
  std::vector<int> minuscule_nodes_;
};

}  // namespace adeweyl
