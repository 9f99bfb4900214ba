// Copyright 2026 The clumin authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clumin/rational.hpp"

#include <charconv>
#include <limits>
#include <tuple>
#include <utility>

#include "clumin/errors.hpp"

namespace clumin {

namespace {

using Int128 = __int128;

constexpr Int128 kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr Int128 kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow_checked(Int128 value, const char* context) {
    if (value < kInt64Min || value > kInt64Max) {
        throw OverflowError(std::string("rational overflow in ") + context);
    }
    return static_cast<std::int64_t>(value);
}

Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Canonical (numerator, denominator): gcd 1, denominator > 0, both in range.
std::pair<std::int64_t, std::int64_t> normalized(Int128 num, Int128 den, const char* context) {
    if (den == 0) throw InputError("rational denominator is zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (Int128 g = gcd128(num, den); g > 1) {
        num /= g;
        den /= g;
    }
    return {narrow_checked(num, context), narrow_checked(den, context)};
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    std::tie(num_, den_) = normalized(numerator, denominator, "construction");
}

Rational operator+(const Rational& a, const Rational& b) {
    Int128 num = Int128(a.num_) * b.den_ + Int128(b.num_) * a.den_;
    Int128 den = Int128(a.den_) * b.den_;
    Rational r;
    std::tie(r.num_, r.den_) = normalized(num, den, "addition");
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Int128 num = Int128(a.num_) * b.den_ - Int128(b.num_) * a.den_;
    Int128 den = Int128(a.den_) * b.den_;
    Rational r;
    std::tie(r.num_, r.den_) = normalized(num, den, "subtraction");
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    std::tie(r.num_, r.den_) =
        normalized(Int128(a.num_) * b.num_, Int128(a.den_) * b.den_, "multiplication");
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InputError("rational division by zero");
    Rational r;
    std::tie(r.num_, r.den_) =
        normalized(Int128(a.num_) * b.den_, Int128(a.den_) * b.num_, "division");
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Int128 lhs = Int128(a.num_) * b.den_;
    Int128 rhs = Int128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    std::int64_t num = 0;
    auto [p, ec] = std::from_chars(begin, end, num);
    if (ec != std::errc()) throw ParseError("bad rational '" + text + "'");
    if (p == end) return Rational(num);
    if (*p != '/') throw ParseError("bad rational '" + text + "': expected '/'");
    std::int64_t den = 0;
    auto [q, ec2] = std::from_chars(p + 1, end, den);
    if (ec2 != std::errc() || q != end) {
        throw ParseError("bad rational '" + text + "': bad denominator");
    }
    if (den == 0) throw ParseError("bad rational '" + text + "': zero denominator");
    return Rational(num, den);
}

}  // namespace clumin
