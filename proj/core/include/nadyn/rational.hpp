#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nadyn {

// Signals that exact integer arithmetic left the 64-bit range. Callers that
// keep a floating-point mirror catch this and continue inexactly.
struct RationalOverflow : std::runtime_error {
  RationalOverflow() : std::runtime_error("rational arithmetic overflow") {}
};

namespace detail {
inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

// Exact rational on 64-bit integers with overflow-checked arithmetic.
// Always normalized: den > 0 and gcd(|num|, den) == 1.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}

  Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    *this = make(n, d);
  }

  // Parses "7", "-2/3", "+1/6". Returns nullopt on malformed input.
  static std::optional<Rational> from_string(std::string_view s);

  // Exact conversion of a finite double (every double is a rational). Fails
  // when the binary expansion needs more than 64 bits.
  static std::optional<Rational> from_double(double v);

  long long num() const { return num_; }
  long long den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const { return raw(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return make128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  Rational abs() const { return raw(num_ < 0 ? -num_ : num_, den_); }

private:
  using i128 = __int128;
  long long num_ = 0;
  long long den_ = 1;

  static Rational raw(long long n, long long d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  static Rational make(long long n, long long d) { return make128(i128(n), i128(d)); }

  static Rational make128(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lim = i128(INT64_MAX);
    if (n > lim || n < -lim || d > lim) throw RationalOverflow();
    return raw(static_cast<long long>(n), static_cast<long long>(d));
  }
};

inline std::optional<Rational> Rational::from_string(std::string_view s) {
  auto parse_int = [](std::string_view t, long long& out) -> bool {
    if (t.empty()) return false;
    bool neg = false;
    size_t i = 0;
    if (t[0] == '+' || t[0] == '-') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) return false;
    long long v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
      if (v > (INT64_MAX - 9) / 10) return false;
      v = v * 10 + (t[i] - '0');
    }
    out = neg ? -v : v;
    return true;
  };
  size_t slash = s.find('/');
  long long n = 0, d = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(s, n)) return std::nullopt;
  } else {
    if (!parse_int(s.substr(0, slash), n)) return std::nullopt;
    if (!parse_int(s.substr(slash + 1), d) || d == 0) return std::nullopt;
  }
  try {
    return Rational(n, d);
  } catch (const RationalOverflow&) {
    return std::nullopt;
  }
}

inline std::optional<Rational> Rational::from_double(double v) {
  if (!(v == v) || v - v != 0) return std::nullopt;  // nan or inf
  if (v == 0) return Rational(0);
  int exp = 0;
  double m = std::frexp(v, &exp);         // v = m * 2^exp, |m| in [1/2, 1)
  long long mant = static_cast<long long>(m * 9007199254740992.0);  // m * 2^53
  exp -= 53;
  while (mant != 0 && (mant & 1) == 0) {
    mant >>= 1;
    ++exp;
  }
  if (exp >= 0) {
    if (exp > 10) return std::nullopt;  // would overflow for large magnitudes
    i128 n = i128(mant) << exp;
    if (n > INT64_MAX || n < -i128(INT64_MAX)) return std::nullopt;
    return raw(static_cast<long long>(n), 1);
  }
  if (exp < -62) return std::nullopt;
  return raw(mant, 1LL << -exp);
}

}  // namespace nadyn
