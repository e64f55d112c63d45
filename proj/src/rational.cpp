// SPDX-License-Identifier: Apache-2.0
#include "locapprox/rational.hpp"

#include <cctype>

#include "locapprox/error.hpp"

namespace locapprox {

std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ValidationError("malformed number '" + std::string(whole) + "'");
    BigInt v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ValidationError("malformed number '" + std::string(whole) + "'");
        v = v * 10 + (ch - '0');
    }
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text, bool* exact_form) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational value;
    bool exact = true;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(body.substr(0, slash), text);
        BigInt den = parse_integer(body.substr(slash + 1), text);
        if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        value = Rational(num, den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot);
        std::string_view fp = body.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw ValidationError("malformed number '" + std::string(text) + "'");
        BigInt whole = ip.empty() ? BigInt(0) : parse_integer(ip, text);
        BigInt frac = fp.empty() ? BigInt(0) : parse_integer(fp, text);
        BigInt scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        value = Rational(whole * scale + frac, scale);
        exact = false;
    } else {
        value = Rational(parse_integer(body, text));
    }
    if (exact_form) *exact_form = exact;
    return negative ? Rational(-value) : value;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt ceil(const Rational& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    BigInt quot = num / den;
    if (num % den != 0 && num > 0) quot += 1;
    return quot;
}

}  // namespace locapprox
