#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace adeweyl {

// Exact arithmetic only: arbitrary-precision integers and rationals.
// No floating point is used anywhere in this library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Narrowing conversion that refuses to lose information.
// `what` names the quantity for the diagnostic.
int64_t to_int64(const Integer& value, const char* what);

// Largest integer <= q.
Integer rational_floor(const Rational& q);

bool is_integral(const Rational& q);

std::string integer_to_string(const Integer& value);
Integer integer_from_string(const std::string& text);

}  // namespace adeweyl
