// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace locapprox {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders `num/den` in lowest terms (denominator always printed).
std::string to_string(const Rational& q);

/// Accepts `a/b`, an integer, or a finite decimal literal such as `0.125`.
/// Decimals are converted exactly. Sets `exact_form` to false for decimals.
Rational parse_rational(std::string_view text, bool* exact_form = nullptr);

double to_double(const Rational& q);

/// Smallest integer >= q.
BigInt ceil(const Rational& q);

}  // namespace locapprox
