#include "adeweyl/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace adeweyl {

LaurentPoly LaurentPoly::constant(Integer value) {
  return monomial(std::move(value), 0);
}

LaurentPoly LaurentPoly::monomial(Integer coef, int64_t exp) {
  LaurentPoly p;
  if (coef != 0) p.terms_.emplace(exp, std::move(coef));
  return p;
}

Integer LaurentPoly::coeff(int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

int64_t LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int64_t LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [exp, coef] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(exp, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [exp, coef] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(exp, Integer(-coef));
    if (!inserted) {
      it->second -= coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Integer& slot = out.terms_[ea + eb];
      slot += ca * cb;
      if (slot == 0) out.terms_.erase(ea + eb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::substitute_power(int64_t s) const {
  if (s == 0) {
    throw std::invalid_argument("substitute_power requires a nonzero power");
  }
  LaurentPoly out;
  for (const auto& [exp, coef] : terms_) out.terms_.emplace(exp * s, coef);
  return out;
}

Integer LaurentPoly::eval_at_one() const {
  Integer total = 0;
  for (const auto& [exp, coef] : terms_) total += coef;
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, coef] : terms_) {
    Integer mag = coef;
    if (first) {
      if (coef < 0) {
        out << '-';
        mag = -coef;
      }
      first = false;
    } else {
      out << (coef < 0 ? " - " : " + ");
      if (coef < 0) mag = -coef;
    }
    if (exp == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << '*';
      out << 't';
      if (exp != 1) out << '^' << exp;
    }
  }
  return out.str();
}

namespace {

// Pascal recurrence [a b] = [a-1 b-1] + t^b [a-1 b] on one DP row.
LaurentPoly gauss_binomial_fresh(int64_t a, int64_t b) {
  std::vector<LaurentPoly> row(static_cast<size_t>(b) + 1);
  row[0] = LaurentPoly::one();
  for (int64_t n = 1; n <= a; ++n) {
    int64_t top = std::min(n, b);
    for (int64_t k = top; k >= 1; --k) {
      LaurentPoly shifted;
      if (k < n) shifted = LaurentPoly::monomial(1, k) * row[k];
      row[k] = shifted + row[k - 1];
    }
  }
  return row[b];
}

}  // namespace

LaurentPoly gauss_binomial(int64_t a, int64_t b) {
  if (b < 0 || a < b) return LaurentPoly();
  if (b == 0 || b == a) return LaurentPoly::one();
  // [a b] = [a a-b]; memoize the smaller side only.
  int64_t k = std::min(b, a - b);

  static std::shared_mutex mutex;
  static std::map<std::pair<int64_t, int64_t>, LaurentPoly> memo;
  {
    std::shared_lock lock(mutex);
    auto it = memo.find({a, k});
    if (it != memo.end()) return it->second;
  }
  LaurentPoly result = gauss_binomial_fresh(a, k);
  {
    std::unique_lock lock(mutex);
    memo.emplace(std::make_pair(a, k), result);
  }
  return result;
}

std::string laurent_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exp, coef] : p.terms()) {
    nlohmann::json term;
    term["exp"] = exp;
    term["coef"] = coef.str();
    terms.push_back(std::move(term));
  }
  nlohmann::json doc;
  doc["var"] = "t";
  doc["terms"] = std::move(terms);
  return doc.dump();
}

LaurentPoly laurent_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid polynomial JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("var") || !doc.contains("terms") ||
      doc["var"] != "t" || !doc["terms"].is_array()) {
    throw std::invalid_argument(
        "polynomial JSON must be an object with var \"t\" and a terms array");
  }
  LaurentPoly out;
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coef") ||
        !term["exp"].is_number_integer() || !term["coef"].is_string()) {
      throw std::invalid_argument(
          "polynomial term must have an integer exp and a decimal-string coef");
    }
    int64_t exp = term["exp"].get<int64_t>();
    Integer coef = integer_from_string(term["coef"].get<std::string>());
    out += LaurentPoly::monomial(std::move(coef), exp);
  }
  return out;
}

}  // namespace adeweyl
