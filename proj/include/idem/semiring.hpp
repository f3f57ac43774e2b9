#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ranges>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "idem/boolean.hpp"
#include "idem/error.hpp"
#include "idem/report.hpp"
#include "idem/scalar.hpp"

namespace idem {

/// Distinguished constants of a complete idempotent semiring.
template <class S>
struct semiring_traits;

template <>
struct semiring_traits<Extended> {
  static Extended zero() { return Extended::bottom(); }
  static Extended one() { return Extended::unit(); }
  static Extended top() { return Extended::top(); }
  static constexpr const char* name = "completed max-plus";
};

template <>
struct semiring_traits<Boolean> {
  static Boolean zero() { return {false}; }
  static Boolean one() { return {true}; }
  static Boolean top() { return {true}; }
  static constexpr const char* name = "boolean";
};

/// Scalars of an a-complete idempotent semiring together with the two
/// residuals the dual theory is built from:
///   cover_coefficient(y, x) = ∧{k : y ⪯ k⊙x}
///   fit_coefficient(y, w)   = ⊕{k : k⊙w ⪯ y}
template <class S>
concept complete_idempotent_semiring = std::regular<S> && requires(const S& a, const S& b) {
  { semiring_traits<S>::zero() } -> std::same_as<S>;
  { semiring_traits<S>::one() } -> std::same_as<S>;
  { semiring_traits<S>::top() } -> std::same_as<S>;
  { oplus(a, b) } -> std::same_as<S>;
  { otimes(a, b) } -> std::same_as<S>;
  { meet(a, b) } -> std::same_as<S>;
  { leq(a, b) } -> std::convertible_to<bool>;
  { cover_coefficient(a, b) } -> std::same_as<S>;
  { fit_coefficient(a, b) } -> std::same_as<S>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(complete_idempotent_semiring<Extended>);
static_assert(complete_idempotent_semiring<Boolean>);

/// ⊕X; the empty sup is the zero.
template <std::ranges::input_range R>
  requires complete_idempotent_semiring<std::ranges::range_value_t<R>>
auto sup(const R& xs) {
  using S = std::ranges::range_value_t<R>;
  S acc = semiring_traits<S>::zero();
  for (const auto& x : xs) acc = oplus(acc, x);
  return acc;
}

/// ∧X; the empty inf is the top.
template <std::ranges::input_range R>
  requires complete_idempotent_semiring<std::ranges::range_value_t<R>>
auto inf(const R& xs) {
  using S = std::ranges::range_value_t<R>;
  S acc = semiring_traits<S>::top();
  for (const auto& x : xs) acc = meet(acc, x);
  return acc;
}

inline Extended sup(std::initializer_list<Extended> xs) { return sup(std::span<const Extended>(xs.begin(), xs.size())); }
inline Extended inf(std::initializer_list<Extended> xs) { return inf(std::span<const Extended>(xs.begin(), xs.size())); }

/// Runtime description of an idempotent semiring instance. `carrier` is
/// empty for the real-number instances, which can only be sampled.
/// `inverse` is set iff the instance is a semifield; it returns nullopt for
/// elements that are not invertible.
template <class T>
struct SemiringDescriptor {
  std::string name;
  std::optional<std::vector<T>> carrier;
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&, const T&)> mul;
  T zero;
  T one;
  std::function<std::optional<T>(const T&)> inverse;
  bool is_b_complete = false;
  bool is_a_complete = false;
  std::function<std::string(const T&)> format;
};

inline SemiringDescriptor<Boolean> boolean_semifield() {
  SemiringDescriptor<Boolean> d;
  d.name = "boolean";
  d.carrier = std::vector<Boolean>{{false}, {true}};
  d.add = [](const Boolean& a, const Boolean& b) { return oplus(a, b); };
  d.mul = [](const Boolean& a, const Boolean& b) { return otimes(a, b); };
  d.zero = {false};
  d.one = {true};
  d.inverse = [](const Boolean& a) -> std::optional<Boolean> {
    if (!a.value) return std::nullopt;
    return a;
  };
  d.is_b_complete = d.is_a_complete = true;
  d.format = [](const Boolean& a) { return to_string(a); };
  return d;
}

namespace detail {

inline SemiringDescriptor<Extended> max_plus_base(std::string name) {
  SemiringDescriptor<Extended> d;
  d.name = std::move(name);
  d.add = [](const Extended& a, const Extended& b) { return oplus(a, b); };
  d.mul = [](const Extended& a, const Extended& b) { return otimes(a, b); };
  d.zero = Extended::bottom();
  d.one = Extended::unit();
  d.format = [](const Extended& a) { return to_string(a); };
  return d;
}

}  // namespace detail

/// R_max = R ∪ {-inf}: a b-complete semifield. Samples must not contain +inf.
inline SemiringDescriptor<Extended> max_plus() {
  auto d = detail::max_plus_base("max-plus");
  d.inverse = [](const Extended& a) -> std::optional<Extended> {
    if (!a.is_finite()) return std::nullopt;
    return inverse(a);
  };
  d.is_b_complete = true;
  return d;
}

/// R̂_max = R_max ∪ {+inf}: a-complete, and therefore not a semifield.
inline SemiringDescriptor<Extended> completed_max_plus() {
  auto d = detail::max_plus_base("completed max-plus");
  d.is_b_complete = d.is_a_complete = true;
  return d;
}

/// Checks every idempotent-semiring axiom over all triples of `sample`, and
/// both generalized distributive laws over all subsets of it. An empty
/// sample means the whole (finite) carrier.
template <class T>
Report check_semiring_axioms(const SemiringDescriptor<T>& d, std::span<const T> sample = {}) {
  std::vector<T> elems(sample.begin(), sample.end());
  if (elems.empty()) {
    if (!d.carrier) throw DomainError("infinite carrier '" + d.name + "' needs an explicit sample");
    elems = *d.carrier;
  }
  if (elems.size() > 20) throw DomainError("axiom sample limited to 20 elements");

  auto fmt = [&](std::initializer_list<T> xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& x : xs) {
      os << (first ? "" : ", ") << d.format(x);
      first = false;
    }
    os << ')';
    return os.str();
  };
  const auto& add = d.add;
  const auto& mul = d.mul;

  Report r;
  r.check("zero differs from one").expect(!(d.zero == d.one), [&] { return fmt({d.zero, d.one}); });

  auto& idem_add = r.check("additive idempotency");
  auto& comm_add = r.check("additive commutativity");
  auto& ident_zero = r.check("additive identity of zero");
  auto& ident_one = r.check("multiplicative identity");
  auto& absorb = r.check("zero absorption");
  for (const auto& a : elems) {
    idem_add.expect(add(a, a) == a, [&] { return fmt({a}); });
    ident_zero.expect(add(a, d.zero) == a && add(d.zero, a) == a, [&] { return fmt({a}); });
    ident_one.expect(mul(a, d.one) == a && mul(d.one, a) == a, [&] { return fmt({a}); });
    absorb.expect(mul(a, d.zero) == d.zero && mul(d.zero, a) == d.zero, [&] { return fmt({a}); });
    for (const auto& b : elems) comm_add.expect(add(a, b) == add(b, a), [&] { return fmt({a, b}); });
  }

  auto& assoc_add = r.check("additive associativity");
  auto& assoc_mul = r.check("multiplicative associativity");
  auto& left_dist = r.check("left distributivity");
  auto& right_dist = r.check("right distributivity");
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) {
        auto w = [&] { return fmt({a, b, c}); };
        assoc_add.expect(add(a, add(b, c)) == add(add(a, b), c), w);
        assoc_mul.expect(mul(a, mul(b, c)) == mul(mul(a, b), c), w);
        left_dist.expect(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), w);
        right_dist.expect(mul(add(b, c), a) == add(mul(b, a), mul(c, a)), w);
      }

  auto& gen_left = r.check("generalized distributivity k(+X) = +(kX)");
  auto& gen_right = r.check("generalized distributivity (+X)k = +(Xk)");
  const std::uint32_t subsets = std::uint32_t{1} << elems.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    T joined = d.zero;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) joined = add(joined, elems[i]);
    for (const auto& k : elems) {
      T left = d.zero, right = d.zero;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) {
          left = add(left, mul(k, elems[i]));
          right = add(right, mul(elems[i], k));
        }
      auto w = [&] {
        std::ostringstream os;
        os << "k=" << d.format(k) << " X={";
        bool first = true;
        for (std::size_t i = 0; i < elems.size(); ++i)
          if (mask & (std::uint32_t{1} << i)) {
            os << (first ? "" : ", ") << d.format(elems[i]);
            first = false;
          }
        os << '}';
        return os.str();
      };
      gen_left.expect(mul(k, joined) == left, w);
      gen_right.expect(mul(joined, k) == right, w);
    }
  }

  if (d.inverse) {
    auto& comm_mul = r.check("multiplicative commutativity");
    auto& inverses = r.check("nonzero elements invertible");
    for (const auto& a : elems) {
      for (const auto& b : elems) comm_mul.expect(mul(a, b) == mul(b, a), [&] { return fmt({a, b}); });
      if (a == d.zero) continue;
      auto inv = d.inverse(a);
      inverses.expect(inv.has_value() && mul(a, *inv) == d.one, [&] { return fmt({a}); });
    }
  }
  return r;
}

template <class T>
Report check_semiring_axioms(const SemiringDescriptor<T>& d, std::initializer_list<T> sample) {
  return check_semiring_axioms(d, std::span<const T>(sample.begin(), sample.size()));
}

}  // namespace idem
