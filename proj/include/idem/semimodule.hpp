#pragma once

// The free semimodule K^n (functions on a finite labeled set X) over a
// complete idempotent semiring, with the all-top vector playing ∞ = sup V.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "idem/error.hpp"
#include "idem/report.hpp"
#include "idem/semiring.hpp"

namespace idem {

template <complete_idempotent_semiring S>
class Vector {
 public:
  using value_type = S;

  Vector() = default;
  explicit Vector(std::vector<S> coords) : coords_(std::move(coords)) {}
  Vector(std::vector<S> coords, std::vector<std::string> labels)
      : coords_(std::move(coords)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != coords_.size())
      throw DimensionError("expected " + std::to_string(coords_.size()) + " labels, got " +
                           std::to_string(labels_.size()));
  }
  Vector(std::initializer_list<S> coords) : coords_(coords) {}

  static Vector constant(std::size_t dim, const S& s) { return Vector(std::vector<S>(dim, s)); }
  static Vector zero(std::size_t dim) { return constant(dim, semiring_traits<S>::zero()); }
  static Vector top(std::size_t dim) { return constant(dim, semiring_traits<S>::top()); }

  /// 𝟏 at coordinate i, 𝟎 elsewhere.
  static Vector unit(std::size_t dim, std::size_t i) {
    auto v = zero(dim);
    v.coords_.at(i) = semiring_traits<S>::one();
    return v;
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  S& operator[](std::size_t i) { return coords_[i]; }
  std::span<const S> coords() const noexcept { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Vector with_labels(std::vector<std::string> labels) const { return Vector(coords_, std::move(labels)); }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!(c == semiring_traits<S>::zero())) return false;
    return true;
  }

  bool is_top() const {
    for (const auto& c : coords_)
      if (!(c == semiring_traits<S>::top())) return false;
    return true;
  }

  /// Coordinates only; labels are metadata.
  friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<S> coords_;
  std::vector<std::string> labels_;
};

template <complete_idempotent_semiring S>
std::string to_string(const Vector<S>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

template <complete_idempotent_semiring S>
std::ostream& operator<<(std::ostream& os, const Vector<S>& v) {
  return os << to_string(v);
}

namespace detail {

/// Throws unless the operands have equal dimension and, when both carry
/// labels, equal labels. Returns the labels the result should carry.
template <complete_idempotent_semiring S>
const std::vector<std::string>& compatible_labels(const Vector<S>& a, const Vector<S>& b) {
  if (a.dim() != b.dim())
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  if (a.has_labels() && b.has_labels() && a.labels() != b.labels()) throw DimensionError("coordinate label mismatch");
  return a.has_labels() ? a.labels() : b.labels();
}

template <complete_idempotent_semiring S, class Op>
Vector<S> zip(const Vector<S>& a, const Vector<S>& b, Op op) {
  const auto& labels = compatible_labels(a, b);
  std::vector<S> out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(op(a[i], b[i]));
  return Vector<S>(std::move(out), labels);
}

}  // namespace detail

template <complete_idempotent_semiring S>
Vector<S> oplus(const Vector<S>& a, const Vector<S>& b) {
  return detail::zip(a, b, [](const S& x, const S& y) { return oplus(x, y); });
}

template <complete_idempotent_semiring S>
Vector<S> meet(const Vector<S>& a, const Vector<S>& b) {
  return detail::zip(a, b, [](const S& x, const S& y) { return meet(x, y); });
}

template <complete_idempotent_semiring S>
Vector<S> otimes(const S& k, const Vector<S>& x) {
  std::vector<S> out;
  out.reserve(x.dim());
  for (const auto& c : x) out.push_back(otimes(k, c));
  return Vector<S>(std::move(out), x.labels());
}

template <complete_idempotent_semiring S>
bool leq(const Vector<S>& a, const Vector<S>& b) {
  detail::compatible_labels(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!leq(a[i], b[i])) return false;
  return true;
}

/// ⊕ of a set of vectors; the zero vector of `dim` when empty.
template <complete_idempotent_semiring S>
Vector<S> sup(std::span<const Vector<S>> xs, std::size_t dim) {
  Vector<S> acc = Vector<S>::zero(dim);
  for (const auto& x : xs) acc = oplus(acc, x);
  return acc;
}

/// ∧ of a set of vectors; the all-top vector of `dim` when empty.
template <complete_idempotent_semiring S>
Vector<S> inf(std::span<const Vector<S>> xs, std::size_t dim) {
  Vector<S> acc = Vector<S>::top(dim);
  for (const auto& x : xs) acc = meet(acc, x);
  return acc;
}

template <complete_idempotent_semiring S>
Vector<S> sup(const std::vector<Vector<S>>& xs, std::size_t dim) {
  return sup(std::span<const Vector<S>>(xs), dim);
}

template <complete_idempotent_semiring S>
Vector<S> inf(const std::vector<Vector<S>>& xs, std::size_t dim) {
  return inf(std::span<const Vector<S>>(xs), dim);
}

/// Generators of a finitely generated subsemimodule. Zero generators are
/// dropped: they contribute nothing to any combination.
template <complete_idempotent_semiring S>
class SpanBasis {
 public:
  SpanBasis(std::vector<Vector<S>> generators, std::size_t dim) : dim_(dim) {
    for (auto& g : generators) {
      if (g.dim() != dim_)
        throw DimensionError("generator of dimension " + std::to_string(g.dim()) + " in a span of dimension " +
                             std::to_string(dim_));
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t count() const noexcept { return generators_.size(); }
  const std::vector<Vector<S>>& generators() const noexcept { return generators_; }
  const Vector<S>& operator[](std::size_t i) const { return generators_.at(i); }

 private:
  std::size_t dim_;
  std::vector<Vector<S>> generators_;
};

template <complete_idempotent_semiring S>
struct Projection {
  Vector<S> projection;
  bool member = false;
  std::vector<S> coefficients;  // greatest k_i with k_i⊙w_i ⪯ y
};

/// Greatest element of the span below y: each generator is scaled by the
/// largest coefficient that keeps it under y. Coordinates where the
/// generator is 𝟎 impose no constraint; where it is the top element, any
/// non-top y_j forces the coefficient to 𝟎.
template <complete_idempotent_semiring S>
Projection<S> project_onto_span(const Vector<S>& y, const SpanBasis<S>& w) {
  if (y.dim() != w.dim())
    throw DimensionError("dimension mismatch: " + std::to_string(y.dim()) + " vs " + std::to_string(w.dim()));
  Projection<S> out{Vector<S>::zero(y.dim()).with_labels(y.labels()), false, {}};
  for (const auto& g : w.generators()) {
    S k = semiring_traits<S>::top();
    for (std::size_t j = 0; j < y.dim(); ++j) k = meet(k, fit_coefficient(y[j], g[j]));
    out.coefficients.push_back(k);
    out.projection = oplus(out.projection, otimes(k, g));
  }
  out.member = out.projection == y;
  return out;
}

namespace detail {

template <class T>
std::vector<T> pick(std::span<const T> xs, std::uint64_t mask) {
  std::vector<T> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) out.push_back(xs[i]);
  return out;
}

template <class T>
std::string describe_set(const std::vector<T>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + to_string(xs[i]);
  return out + "}";
}

inline void require_enumerable(std::size_t n, const char* what) {
  if (n > 20) throw DomainError(std::string(what) + " limited to 20 elements for subset enumeration");
}

}  // namespace detail

/// Checks the b-space law (∧Q)⊙x = ∧(Q⊙x) over all nonempty Q ⊆ scalars and
/// all samples x other than the all-top vector, and both generalized
/// distributive laws (⊕Q)⊙x = ⊕(Q⊙x), k⊙(⊕X) = ⊕(k⊙X) over all subsets.
template <complete_idempotent_semiring S>
Report check_b_space_axioms(std::span<const Vector<S>> samples, std::span<const S> scalars) {
  if (samples.empty()) throw DomainError("b-space check needs at least one sample vector");
  detail::require_enumerable(samples.size(), "sample vectors");
  detail::require_enumerable(scalars.size(), "sample scalars");
  const std::size_t dim = samples.front().dim();
  for (const auto& x : samples)
    if (x.dim() != dim) throw DimensionError("sample vectors of mixed dimension");

  Report r;
  auto& skipped = r.check("samples skipped as the top vector");
  auto& meet_law = r.check("(inf Q)x = inf(Qx)");
  auto& sup_scalars = r.check("(+Q)x = +(Qx)");
  auto& sup_vectors = r.check("k(+X) = +(kX)");

  const std::uint64_t scalar_subsets = std::uint64_t{1} << scalars.size();
  for (const auto& x : samples) {
    if (x.is_top()) {
      ++skipped.cases;
      continue;
    }
    for (std::uint64_t mask = 0; mask < scalar_subsets; ++mask) {
      auto q = detail::pick(scalars, mask);
      std::vector<Vector<S>> scaled;
      for (const auto& k : q) scaled.push_back(otimes(k, x));
      auto w = [&] { return "Q=" + detail::describe_set(q) + " x=" + to_string(x); };
      if (mask != 0) meet_law.expect(otimes(inf(q), x) == inf(scaled, dim), w);
      sup_scalars.expect(otimes(sup(q), x) == sup(scaled, dim), w);
    }
  }

  const std::uint64_t vector_subsets = std::uint64_t{1} << samples.size();
  for (std::uint64_t mask = 0; mask < vector_subsets; ++mask) {
    auto xs = detail::pick(samples, mask);
    auto joined = sup(xs, dim);
    for (const auto& k : scalars) {
      std::vector<Vector<S>> scaled;
      for (const auto& x : xs) scaled.push_back(otimes(k, x));
      sup_vectors.expect(otimes(k, joined) == sup(scaled, dim),
                         [&] { return "k=" + to_string(k) + " X=" + detail::describe_set(xs); });
    }
  }
  return r;
}

template <complete_idempotent_semiring S>
Report check_b_space_axioms(const std::vector<Vector<S>>& samples, const std::vector<S>& scalars) {
  return check_b_space_axioms(std::span<const Vector<S>>(samples), std::span<const S>(scalars));
}

using FinVector = Vector<Extended>;

}  // namespace idem
