#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "adeweyl/numeric.hpp"

namespace adeweyl {

// Laurent polynomial in one variable t with Integer coefficients,
// kept canonical: the term map never stores a zero coefficient, so
// equality is plain map equality and rendering is deterministic.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // the zero polynomial
  static LaurentPoly constant(Integer value);
  static LaurentPoly monomial(Integer coef, int64_t exp);
  static LaurentPoly one() { return constant(1); }

  bool is_zero() const { return terms_.empty(); }
  // Terms in ascending exponent order.
  const std::map<int64_t, Integer>& terms() const { return terms_; }
  Integer coeff(int64_t exp) const;
  // Exponent range; both require a nonzero polynomial.
  int64_t min_exponent() const;
  int64_t max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly&) const = default;

  // Substitutes t -> t^s.  s may be negative; s = 0 is rejected.
  LaurentPoly substitute_power(int64_t s) const;
  Integer eval_at_one() const;

  // Human readable sum in ascending exponent order, e.g. "1 + t^2",
  // "t^-2 + 2*t^-1", "0".
  std::string to_string() const;

 private:
  std::map<int64_t, Integer> terms_;
};

// Gaussian binomial coefficient [a choose b]_t.  Zero when b < 0 or
// a < b (in particular when a < 0 and b = 0); otherwise the standard
// q-binomial with nonnegative coefficients and degree b*(a-b).
// Results are memoized; the memo table is safe for concurrent use.
LaurentPoly gauss_binomial(int64_t a, int64_t b);

// JSON form {"terms":[{"coef":"<decimal>","exp":<int>},...],"var":"t"}
// with terms in ascending exponent order and coefficients as decimal
// strings.  laurent_from_json accepts exactly this shape.
std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

}  // namespace adeweyl
