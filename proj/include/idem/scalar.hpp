#pragma once

// The completed max-plus semiring: {-inf} ∪ Q ∪ {+inf} with ⊕ = max and ⊙ = +.
// Finite values are exact rationals so every algebraic law is an equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "idem/error.hpp"

namespace idem {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of R̂_max. Bottom is the semiring zero (-inf), Finite(0) is the
/// unit, Top (+inf) is the adjoined supremum.
class Extended {
 public:
  enum class Kind : std::uint8_t { bottom, finite, top };

  Extended() noexcept = default;
  explicit Extended(Rational q) : kind_(Kind::finite), value_(std::move(q)) {}
  template <std::integral I>
  explicit Extended(I v) : kind_(Kind::finite), value_(v) {}
  Extended(std::int64_t num, std::int64_t den) : kind_(Kind::finite), value_(num, den) {}

  static Extended bottom() noexcept { return Extended{}; }
  static Extended top() noexcept {
    Extended e;
    e.kind_ = Kind::top;
    return e;
  }
  static Extended unit() { return Extended{0}; }

  Kind kind() const noexcept { return kind_; }
  bool is_bottom() const noexcept { return kind_ == Kind::bottom; }
  bool is_top() const noexcept { return kind_ == Kind::top; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }

  const Rational& value() const {
    if (!is_finite()) throw DomainError("infinite scalar has no rational value");
    return value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }

  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::finite || a.value_ == b.value_) return std::strong_ordering::equal;
    return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  Kind kind_ = Kind::bottom;
  Rational value_{};  // zero unless finite
};

inline Extended oplus(const Extended& a, const Extended& b) { return a < b ? b : a; }

inline Extended meet(const Extended& a, const Extended& b) { return b < a ? b : a; }

/// Bottom absorbs everything (including Top); Top absorbs every other element.
inline Extended otimes(const Extended& a, const Extended& b) {
  if (a.is_bottom() || b.is_bottom()) return Extended::bottom();
  if (a.is_top() || b.is_top()) return Extended::top();
  return Extended{a.value() + b.value()};
}

inline bool leq(const Extended& a, const Extended& b) { return a <= b; }

/// Multiplicative inverse; defined exactly on the finite elements.
inline Extended inverse(const Extended& a) {
  if (!a.is_finite()) throw DomainError("not invertible");
  return Extended{-a.value()};
}

/// Order-reversing involution -a, with -(-inf) = +inf. Extends `inverse`.
inline Extended conjugate(const Extended& a) {
  switch (a.kind()) {
    case Extended::Kind::bottom: return Extended::top();
    case Extended::Kind::top: return Extended::bottom();
    default: return Extended{-a.value()};
  }
}

/// ∧{k ∈ R_max : y ⪯ k⊙x}, evaluated in R̂_max (∧∅ = +inf).
inline Extended cover_coefficient(const Extended& y, const Extended& x) {
  if (y.is_bottom()) return Extended::bottom();
  if (x.is_bottom()) return Extended::top();
  // every finite k works against +inf, and the infimum of all of them is -inf
  if (x.is_top()) return Extended::bottom();
  if (y.is_top()) return Extended::top();
  return Extended{y.value() - x.value()};
}

/// ⊕{k ∈ R̂_max : k⊙w ⪯ y}.
inline Extended fit_coefficient(const Extended& y, const Extended& w) {
  if (w.is_bottom() || y.is_top()) return Extended::top();
  if (w.is_top() || y.is_bottom()) return Extended::bottom();
  return Extended{y.value() - w.value()};
}

inline std::string to_string(const Extended& a) {
  switch (a.kind()) {
    case Extended::Kind::bottom: return "-inf";
    case Extended::Kind::top: return "+inf";
    default: return a.value().str();
  }
}

inline std::ostream& operator<<(std::ostream& os, const Extended& a) { return os << to_string(a); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses `-inf`, `+inf`, integers, decimals (`-2.5`) and fractions (`7/3`).
/// Decimals are converted exactly.
inline Extended parse_scalar(std::string_view token) {
  if (token == "-inf") return Extended::bottom();
  if (token == "+inf" || token == "inf") return Extended::top();

  const std::string original(token);
  bool negative = false;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }

  Rational q;
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    auto num = token.substr(0, slash);
    auto den = token.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw ParseError("malformed scalar '" + original + "'");
    const Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    q = Rational(Integer{std::string(num)}, d);
  } else if (auto dot = token.find('.'); dot != std::string_view::npos) {
    auto whole = token.substr(0, dot);
    auto frac = token.substr(dot + 1);
    if (!detail::all_digits(whole) || !detail::all_digits(frac))
      throw ParseError("malformed scalar '" + original + "'");
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    q = Rational(Integer{std::string(whole)} * scale + Integer{std::string(frac)}, scale);
  } else {
    if (!detail::all_digits(token)) throw ParseError("malformed scalar '" + original + "'");
    q = Rational(Integer{std::string(token)});
  }
  return Extended{negative ? Rational(-q) : q};
}

}  // namespace idem
