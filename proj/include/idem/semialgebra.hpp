#pragma once

// Functions on a finite labeled set X with pointwise max-plus operations:
// a commutative semialgebra whose nonzero bounded elements are invertible.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idem/error.hpp"
#include "idem/functionals.hpp"
#include "idem/semimodule.hpp"

namespace idem {

class AlgebraElement {
 public:
  /// Unlabeled input gets the labels x1..xn.
  explicit AlgebraElement(FinVector values) : values_(std::move(values)) {
    if (!values_.has_labels()) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < values_.dim(); ++i) labels.push_back("x" + std::to_string(i + 1));
      values_ = values_.with_labels(std::move(labels));
    }
  }
  AlgebraElement(std::vector<std::string> labels, std::vector<Extended> values)
      : AlgebraElement(FinVector(std::move(values), std::move(labels))) {}

  /// The unit function 𝟏 (constantly 0).
  static AlgebraElement one(std::vector<std::string> labels) {
    const auto n = labels.size();
    return {std::move(labels), std::vector<Extended>(n, Extended::unit())};
  }
  static AlgebraElement zero(std::vector<std::string> labels) {
    const auto n = labels.size();
    return {std::move(labels), std::vector<Extended>(n, Extended::bottom())};
  }
  /// 𝟏 at t, 𝟎 elsewhere.
  static AlgebraElement point_mass(std::vector<std::string> labels, std::size_t t) {
    auto n = labels.size();
    return AlgebraElement(FinVector::unit(n, t).with_labels(std::move(labels)));
  }

  const FinVector& underlying() const noexcept { return values_; }
  const std::vector<std::string>& labels() const noexcept { return values_.labels(); }
  std::size_t size() const noexcept { return values_.dim(); }
  const Extended& operator[](std::size_t i) const { return values_[i]; }

  bool is_zero() const { return values_.is_zero(); }

  /// A bounded real-valued function: every value finite.
  bool is_bounded() const {
    for (const auto& v : values_)
      if (!v.is_finite()) return false;
    return true;
  }

  bool is_invertible() const { return is_bounded(); }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.labels() == b.labels() && a.values_ == b.values_;
  }

 private:
  FinVector values_;
};

inline std::string to_string(const AlgebraElement& a) { return to_string(a.underlying()); }

namespace detail {

inline void same_domain(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.labels() != b.labels()) throw DimensionError("functions are defined on different sets");
}

}  // namespace detail

/// (φ1⊙φ2)(x) = φ1(x)⊙φ2(x).
inline AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
  detail::same_domain(a, b);
  std::vector<Extended> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(otimes(a[i], b[i]));
  return {a.labels(), std::move(out)};
}

inline AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) {
  detail::same_domain(a, b);
  return AlgebraElement(oplus(a.underlying(), b.underlying()));
}

inline AlgebraElement alg_scale(const Extended& k, const AlgebraElement& a) {
  return AlgebraElement(otimes(k, a.underlying()));
}

inline AlgebraElement alg_inverse(const AlgebraElement& a) {
  if (!a.is_invertible()) throw DomainError("not invertible: " + to_string(a));
  std::vector<Extended> out;
  for (const auto& v : a.underlying()) out.push_back(inverse(v));
  return {a.labels(), std::move(out)};
}

/// 𝟏*(φ) = sup over X of φ.
inline Extended one_star(const AlgebraElement& phi) { return sup(phi.underlying().coords()); }

/// ⟨φ1, φ2⟩ = 𝟏*(φ1⊙φ2) = sup over X of φ1(x) + φ2(x).
inline Extended scalar_product(const AlgebraElement& a, const AlgebraElement& b) { return one_star(alg_mul(a, b)); }

/// Idempotent integral of φ against a weight; the weight defaults to 𝟏,
/// giving the plain sup of φ.
inline Extended idempotent_integral(const AlgebraElement& phi, const AlgebraElement& weight) {
  return scalar_product(phi, weight);
}

inline Extended idempotent_integral(const AlgebraElement& phi) {
  return idempotent_integral(phi, AlgebraElement::one(phi.labels()));
}

struct ResidualIdentity {
  Extended star_side;  // x*(y)
  Extended unit_side;  // 𝟏*(y⊙x⁻¹)
  bool holds = false;
};

/// Evaluates both sides of x*(y) = 𝟏*(y⊙x⁻¹) for invertible x.
inline ResidualIdentity check_prop4(const AlgebraElement& x, const AlgebraElement& y) {
  detail::same_domain(x, y);
  if (!x.is_invertible()) throw DomainError("residual identity requires invertible x");
  ResidualIdentity r{star_eval(x.underlying(), y.underlying()), one_star(alg_mul(y, alg_inverse(x)))};
  r.holds = r.star_side == r.unit_side;
  return r;
}

struct RieszResult {
  AlgebraElement element;
  bool bounded = true;  // element takes only finite values
  std::vector<std::string> notes;
};

/// Recovers x with f(y) = ⟨y, x⟩ by probing f on the point masses:
/// ⟨δ_t, x⟩ = x(t). Optional `probes` verify the identity afterwards.
template <class F>
RieszResult riesz_representer(const F& f, const std::vector<std::string>& labels,
                              std::span<const AlgebraElement> probes = {}) {
  std::vector<Extended> values;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    Extended v = f(AlgebraElement::point_mass(labels, t));
    if (v.is_top()) throw DomainError("functional not representable within A: value +inf at '" + labels[t] + "'");
    values.push_back(std::move(v));
  }
  RieszResult out{AlgebraElement(labels, std::move(values)), true, {}};
  if (out.element.is_zero()) throw DomainError("zero functional");
  for (std::size_t t = 0; t < labels.size(); ++t)
    if (out.element[t].is_bottom()) {
      out.bounded = false;
      out.notes.push_back("representer is -inf at '" + labels[t] + "', outside the bounded functions");
    }
  for (const auto& p : probes)
    if (f(p) != scalar_product(p, out.element))
      throw DomainError("functional is not a-linear: it disagrees with its representer at " + to_string(p));
  return out;
}

}  // namespace idem
