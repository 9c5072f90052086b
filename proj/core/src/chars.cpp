#include "adeweyl/chars.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace adeweyl {

namespace {

constexpr int kCacheFormatVersion = 1;

std::string cache_key(const CartanDatum& datum, const Weight& lambda) {
  std::ostringstream key;
  key << datum.name() << '|';
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (i > 0) key << ',';
    key << lambda[i];
  }
  return key.str();
}

// Freudenthal recursion over the dominant weights of V(lambda), walked
// in increasing height of lambda - mu so every referenced multiplicity
// is already known.
DominantCharacter compute_character(const CartanDatum& datum,
                                    const Weight& lambda,
                                    const Budget* budget) {
  if (!datum.is_dominant(lambda)) {
    throw std::invalid_argument("dominant_character requires a dominant weight");
  }
  DominantCharacter character;
  character.highest = lambda;

  std::vector<Weight> support = datum.dominant_weights_below(lambda, budget);
  const std::vector<RootElem>& positive = datum.positive_roots();

  for (const Weight& mu : support) {
    if (mu == lambda) {
      character.mults[mu] = 1;
      continue;
    }
    if (budget != nullptr) budget->charge();
    Integer numerator = 0;
    for (const RootElem& alpha : positive) {
      // (mu + k*alpha, alpha) = (mu, alpha) + 2k since (alpha, alpha) = 2.
      int64_t base = datum.pairing(mu, alpha);
      Weight w = datum.root_to_weight(alpha);
      Weight shifted = mu;
      for (int64_t k = 1;; ++k) {
        shifted = shifted + w;
        Weight conj = datum.dominant_conjugate(shifted);
        auto it = character.mults.find(conj);
        if (it == character.mults.end()) break;
        numerator += it->second * (base + 2 * k);
      }
    }
    numerator *= 2;
    // Denominator (lambda+rho, lambda+rho) - (mu+rho, mu+rho) expands to
    // (lambda + mu + 2 rho, lambda - mu), an integer since lambda - mu
    // lies in the root lattice.
    std::optional<RootElem> diff = datum.to_root_element(lambda - mu);
    if (!diff.has_value()) {
      throw std::logic_error("dominant support weight outside lambda - Q");
    }
    Integer denominator =
        datum.pairing(lambda + mu + datum.rho() + datum.rho(), *diff);
    if (denominator <= 0 || numerator % denominator != 0) {
      throw std::logic_error("Freudenthal recursion produced a non-integer");
    }
    Integer mult = numerator / denominator;
    if (mult <= 0) {
      throw std::logic_error("Freudenthal recursion produced a non-positive multiplicity");
    }
    character.mults[mu] = mult;
  }
  return character;
}

}  // namespace

Integer DominantCharacter::multiplicity(const Weight& dominant_mu) const {
  auto it = mults.find(dominant_mu);
  return it == mults.end() ? Integer(0) : it->second;
}

CharacterCache::CharacterCache(std::filesystem::path directory)
    : directory_(std::move(directory)) {
  std::filesystem::create_directories(*directory_);
}

CharacterCache& CharacterCache::global() {
  static CharacterCache instance;
  return instance;
}

std::filesystem::path CharacterCache::file_path(const CartanDatum& datum,
                                                const Weight& lambda) const {
  std::ostringstream name;
  name << "dchar-v" << kCacheFormatVersion << '-' << datum.name() << '-';
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (i > 0) name << '_';
    name << lambda[i];
  }
  name << ".json";
  return *directory_ / name.str();
}

std::shared_ptr<const DominantCharacter> CharacterCache::load_from_disk(
    const CartanDatum& datum, const Weight& lambda) const {
  std::filesystem::path path = file_path(datum, lambda);
  std::ifstream in(path);
  if (!in) return nullptr;
  nlohmann::json doc;
  try {
    in >> doc;
    if (doc.at("format") != "adeweyl-dominant-character" ||
        doc.at("version").get<int>() != kCacheFormatVersion ||
        doc.at("series").get<std::string>() !=
            std::string(1, series_letter(datum.series())) ||
        doc.at("rank").get<int>() != datum.rank() ||
        doc.at("highest").get<std::vector<int64_t>>() != lambda.coords()) {
      return nullptr;
    }
    auto character = std::make_shared<DominantCharacter>();
    character->highest = lambda;
    for (const auto& entry : doc.at("mults")) {
      Weight mu(entry.at("mu").get<std::vector<int64_t>>());
      datum.check_weight(mu);
      character->mults[mu] =
          integer_from_string(entry.at("mult").get<std::string>());
    }
    return character;
  } catch (const std::exception&) {
    // Unreadable or stale cache entries are recomputed, never trusted.
    return nullptr;
  }
}

void CharacterCache::store_to_disk(const CartanDatum& datum,
                                   const DominantCharacter& character) const {
  nlohmann::json mults = nlohmann::json::array();
  for (const auto& [mu, mult] : character.mults) {
    nlohmann::json entry;
    entry["mu"] = mu.coords();
    entry["mult"] = mult.str();
    mults.push_back(std::move(entry));
  }
  nlohmann::json doc;
  doc["format"] = "adeweyl-dominant-character";
  doc["version"] = kCacheFormatVersion;
  doc["series"] = std::string(1, series_letter(datum.series()));
  doc["rank"] = datum.rank();
  doc["highest"] = character.highest.coords();
  doc["mults"] = std::move(mults);

  std::filesystem::path path = file_path(datum, character.highest);
  static std::mt19937_64 rng(std::random_device{}());
  std::filesystem::path temp;
  {
    std::ostringstream name;
    name << path.filename().string() << ".tmp" << rng();
    temp = path.parent_path() / name.str();
  }
  {
    std::ofstream out(temp);
    if (!out) return;
    out << doc.dump(1) << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) std::filesystem::remove(temp, ec);
}

std::shared_ptr<const DominantCharacter> CharacterCache::get_or_compute(
    const CartanDatum& datum, const Weight& lambda, const Budget* budget) {
  datum.check_weight(lambda);
  std::string key = cache_key(datum, lambda);
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  std::shared_ptr<const DominantCharacter> character;
  if (directory_.has_value()) character = load_from_disk(datum, lambda);
  bool fresh = (character == nullptr);
  if (fresh) {
    character = std::make_shared<const DominantCharacter>(
        compute_character(datum, lambda, budget));
  }
  {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, character);
    if (!inserted) return it->second;
  }
  if (fresh && directory_.has_value()) store_to_disk(datum, *character);
  return character;
}

Integer dim_simple(const CartanDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda)) {
    throw std::invalid_argument("dim_simple requires a dominant weight");
  }
  Weight shifted = lambda + datum.rho();
  Integer num = 1;
  Integer den = 1;
  for (const RootElem& alpha : datum.positive_roots()) {
    num *= datum.pairing(shifted, alpha);
    den *= datum.pairing(datum.rho(), alpha);
  }
  if (num % den != 0) {
    throw std::logic_error("Weyl dimension formula produced a non-integer");
  }
  return num / den;
}

std::shared_ptr<const DominantCharacter> dominant_character(
    const CartanDatum& datum, const Weight& lambda, const ComputeOptions& opts) {
  CharacterCache& cache =
      opts.cache != nullptr ? *opts.cache : CharacterCache::global();
  return cache.get_or_compute(datum, lambda, opts.budget);
}

Integer weight_multiplicity(const CartanDatum& datum, const Weight& lambda,
                            const Weight& mu, const ComputeOptions& opts) {
  std::shared_ptr<const DominantCharacter> character =
      dominant_character(datum, lambda, opts);
  return character->multiplicity(datum.dominant_conjugate(mu));
}

std::vector<Weight> all_weights(const CartanDatum& datum, const Weight& lambda,
                                const ComputeOptions& opts) {
  std::shared_ptr<const DominantCharacter> character =
      dominant_character(datum, lambda, opts);
  std::set<Weight> seen;
  for (const auto& [mu, mult] : character->mults) {
    for (const Weight& w : datum.weyl_orbit(mu, opts.budget)) seen.insert(w);
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

}  // namespace adeweyl
