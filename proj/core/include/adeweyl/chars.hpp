#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "adeweyl/budget.hpp"
#include "adeweyl/cartan.hpp"
#include "adeweyl/numeric.hpp"

namespace adeweyl {

// Weyl-invariant character of the simple module V(lambda), stored on
// its dominant weights only.  Every dominant mu <= lambda appears and
// every stored multiplicity is >= 1.
struct DominantCharacter {
  Weight highest;
  std::map<Weight, Integer> mults;

  Integer multiplicity(const Weight& dominant_mu) const;
};

// Memo table for dominant characters keyed by (series, rank, lambda).
// Lookups are safe for concurrent readers and fills are idempotent.
// With a directory attached, computed tables are persisted as versioned
// JSON files (written to a temp file, then renamed into place) and
// reloaded on later runs.
class CharacterCache {
 public:
  CharacterCache() = default;
  explicit CharacterCache(std::filesystem::path directory);

  std::shared_ptr<const DominantCharacter> get_or_compute(
      const CartanDatum& datum, const Weight& lambda,
      const Budget* budget = nullptr);

  // Process-wide in-memory cache used when no cache is supplied.
  static CharacterCache& global();

 private:
  std::shared_ptr<const DominantCharacter> load_from_disk(
      const CartanDatum& datum, const Weight& lambda) const;
  void store_to_disk(const CartanDatum& datum,
                     const DominantCharacter& character) const;
  std::filesystem::path file_path(const CartanDatum& datum,
                                  const Weight& lambda) const;

  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const DominantCharacter>> table_;
  std::optional<std::filesystem::path> directory_;
};

// Dimension of V(lambda) by the Weyl dimension formula.
Integer dim_simple(const CartanDatum& datum, const Weight& lambda);

// Full dominant character of V(lambda) by the Freudenthal recursion.
std::shared_ptr<const DominantCharacter> dominant_character(
    const CartanDatum& datum, const Weight& lambda,
    const ComputeOptions& opts = {});

// Multiplicity of the (not necessarily dominant) weight mu in V(lambda).
Integer weight_multiplicity(const CartanDatum& datum, const Weight& lambda,
                            const Weight& mu, const ComputeOptions& opts = {});

// Every weight of V(lambda) (the union of the Weyl orbits of the
// dominant support), sorted.  Intended for small ranks.
std::vector<Weight> all_weights(const CartanDatum& datum, const Weight& lambda,
                                const ComputeOptions& opts = {});

}  // namespace adeweyl
