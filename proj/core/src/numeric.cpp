#include "adeweyl/numeric.hpp"

#include <limits>
#include <stdexcept>

namespace adeweyl {

int64_t to_int64(const Integer& value, const char* what) {
  static const Integer kMin = std::numeric_limits<int64_t>::min();
  static const Integer kMax = std::numeric_limits<int64_t>::max();
  if (value < kMin || value > kMax) {
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits: " +
                              value.str());
  }
  return value.convert_to<int64_t>();
}

Integer rational_floor(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer quotient = num / den;
  if (num % den != 0 && num < 0) quotient -= 1;
  return quotient;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

std::string integer_to_string(const Integer& value) { return value.str(); }

Integer integer_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bare sign is not an integer");
  for (size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("invalid integer literal: " + text);
    }
  }
  return Integer(text);
}

}  // namespace adeweyl
