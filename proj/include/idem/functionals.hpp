#pragma once

// Linear functionals on K^n through residuation: every a-linear functional
// is y ↦ x*(y) = ∧{k ∈ K : y ⪯ k⊙x} for one representer x.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "idem/error.hpp"
#include "idem/report.hpp"
#include "idem/semimodule.hpp"

namespace idem {

/// x*(y): the least multiple of x that dominates y. The value is the top
/// element when no multiple does, and 𝟎 when y is the zero vector.
template <complete_idempotent_semiring S>
S star_eval(const Vector<S>& x, const Vector<S>& y) {
  detail::compatible_labels(x, y);
  S acc = semiring_traits<S>::zero();
  for (std::size_t i = 0; i < x.dim(); ++i) acc = oplus(acc, cover_coefficient(y[i], x[i]));
  return acc;
}

/// An a-linear functional held by its representer, so two functionals are
/// equal exactly when their representers are.
template <complete_idempotent_semiring S>
class Functional {
 public:
  explicit Functional(Vector<S> representer) : representer_(std::move(representer)) {}

  const Vector<S>& representer() const noexcept { return representer_; }
  std::size_t dim() const noexcept { return representer_.dim(); }

  S operator()(const Vector<S>& y) const { return star_eval(representer_, y); }

  friend bool operator==(const Functional& a, const Functional& b) { return a.representer_ == b.representer_; }

 private:
  Vector<S> representer_;
};

using FunctionalRep = Functional<Extended>;

/// ⊕{y ∈ candidates : f(y) ⪯ 𝟏}. Over a finite carrier with every vector as
/// a candidate this is the canonical representer of f.
template <complete_idempotent_semiring S, class F>
Vector<S> representer_by_supremum(const F& f, std::span<const Vector<S>> candidates, std::size_t dim) {
  Vector<S> acc = Vector<S>::zero(dim);
  for (const auto& y : candidates)
    if (leq(f(y), semiring_traits<S>::one())) acc = oplus(acc, y);
  return acc;
}

/// Representer of a nonzero a-linear functional given as a black box. The
/// supremum of {y : f(y) ⪯ 𝟏} is attained coordinatewise at the unit
/// vectors: x_i = -f(e_i), where -(-inf) = +inf and -(+inf) = -inf. A
/// coordinate with f(e_i) = +inf therefore becomes -inf, and f(e_i) = -inf
/// yields +inf (the representer then lies in the completion of V).
/// When `probes` are given the result is also checked against f on them.
template <class F>
Vector<Extended> recover_representer(const F& f, std::size_t dim, std::span<const FinVector> probes = {}) {
  std::vector<Extended> coords;
  coords.reserve(dim);
  bool nonzero = false;
  for (std::size_t i = 0; i < dim; ++i) {
    Extended v = f(FinVector::unit(dim, i));
    nonzero = nonzero || !v.is_bottom();
    coords.push_back(conjugate(v));
  }
  if (!nonzero) throw DomainError("zero functional has no representer in V");
  FinVector x(std::move(coords));
  for (const auto& p : probes) {
    if (star_eval(x, p) != f(p))
      throw DomainError("functional is not a-linear: it disagrees with its recovered representer at " + to_string(p));
  }
  return x;
}

/// Raised when prescribed values on generators cannot come from any
/// a-linear functional. `witness()` is the offending generator index.
class ExtensionError : public DomainError {
 public:
  ExtensionError(const std::string& what, std::size_t witness) : DomainError(what), witness_(witness) {}
  std::size_t witness() const noexcept { return witness_; }

 private:
  std::size_t witness_;
};

/// Extends f(w_i) = values[i] from the span W to all of K^n. The candidate
/// representer x = ⊕(-values[i])⊙w_i is the least x with x*(w_i) ⪯ values[i]
/// for all i, and x* is antitone in x, so an extension exists iff x* hits
/// every prescribed value exactly.
inline FunctionalRep extend_functional(const SpanBasis<Extended>& w, std::span<const Extended> values,
                                       std::size_t ambient_dim) {
  if (w.dim() != ambient_dim)
    throw DimensionError("span of dimension " + std::to_string(w.dim()) + " in an ambient space of dimension " +
                         std::to_string(ambient_dim));
  if (values.size() != w.count())
    throw DimensionError(std::to_string(values.size()) + " values for " + std::to_string(w.count()) + " generators");

  FinVector x = FinVector::zero(ambient_dim);
  for (std::size_t i = 0; i < w.count(); ++i) x = oplus(x, otimes(conjugate(values[i]), w[i]));
  for (std::size_t i = 0; i < w.count(); ++i) {
    Extended forced = star_eval(x, w[i]);
    if (forced != values[i])
      throw ExtensionError("values do not define an a-linear functional on W: generator " + std::to_string(i) + " " +
                               to_string(w[i]) + " prescribed " + to_string(values[i]) + " but linearity forces " +
                               to_string(forced),
                           i);
  }
  return FunctionalRep(std::move(x));
}

inline FunctionalRep extend_functional(const SpanBasis<Extended>& w, const std::vector<Extended>& values,
                                       std::size_t ambient_dim) {
  return extend_functional(w, std::span<const Extended>(values), ambient_dim);
}

/// A functional with f(x) ≠ f(y). One of x*, y* always works: x*(y) ⪯ 𝟏
/// means y ⪯ x, and x*(x) ⪯ 𝟏 holds for every x.
inline FunctionalRep separate_points(const FinVector& x, const FinVector& y) {
  detail::compatible_labels(x, y);
  if (x == y) throw DomainError("points are equal; no separating functional exists");
  if (star_eval(x, x) != star_eval(x, y)) return FunctionalRep(x);
  return FunctionalRep(y);
}

/// p(y) = sup_a f_a(y). Since x ↦ x*(y) turns finite infima into suprema,
/// p is the functional of the infimum of the representers.
template <complete_idempotent_semiring S>
Functional<S> pointwise_sup(std::span<const Functional<S>> fs) {
  if (fs.empty()) throw DomainError("pointwise sup of an empty family");
  const std::size_t dim = fs.front().dim();
  Vector<S> acc = Vector<S>::top(dim);
  for (const auto& f : fs) acc = meet(acc, f.representer());
  return Functional<S>(std::move(acc));
}

template <complete_idempotent_semiring S>
Functional<S> pointwise_sup(const std::vector<Functional<S>>& fs) {
  return pointwise_sup(std::span<const Functional<S>>(fs));
}

namespace detail {

template <class T>
struct output_traits;

template <complete_idempotent_semiring S>
struct output_traits<S> {
  using scalar = S;
  static S join(const std::vector<S>& xs, const S&) { return sup(xs); }
  static S scale(const S& k, const S& v) { return otimes(k, v); }
};

template <complete_idempotent_semiring S>
struct output_traits<Vector<S>> {
  using scalar = S;
  static Vector<S> join(const std::vector<Vector<S>>& xs, const Vector<S>& shape) { return sup(xs, shape.dim()); }
  static Vector<S> scale(const S& k, const Vector<S>& v) { return otimes(k, v); }
};

/// Nonempty masks over n bits, by increasing popcount.
inline std::vector<std::uint64_t> masks_by_size(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) out.push_back(m);
  std::stable_sort(out.begin(), out.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

}  // namespace detail

/// Checks map(⊕X) = ⊕map(X) for every subset X of `test_vectors` (the empty
/// one included) and map(k⊙v) = k⊙map(v) for every listed scalar k.
/// The map may return scalars (a functional) or vectors.
template <complete_idempotent_semiring S, class Map>
Report check_a_linear(const Map& map, std::span<const Vector<S>> test_vectors, std::span<const S> scalars) {
  using Out = std::decay_t<std::invoke_result_t<const Map&, const Vector<S>&>>;
  using T = detail::output_traits<Out>;
  if (test_vectors.empty()) throw DomainError("a-linearity check needs at least one test vector");
  detail::require_enumerable(test_vectors.size(), "test vectors");
  const std::size_t dim = test_vectors.front().dim();

  std::vector<Out> images;
  for (const auto& v : test_vectors) images.push_back(map(v));

  Report r;
  auto& sups = r.check("sup preservation");
  const std::uint64_t subsets = std::uint64_t{1} << test_vectors.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    auto xs = detail::pick(test_vectors, mask);
    auto ys = detail::pick(std::span<const Out>(images), mask);
    sups.expect(map(sup(xs, dim)) == T::join(ys, images.front()), [&] { return "X=" + detail::describe_set(xs); });
  }

  auto& homog = r.check("homogeneity");
  for (std::size_t i = 0; i < test_vectors.size(); ++i)
    for (const auto& k : scalars)
      homog.expect(map(otimes(k, test_vectors[i])) == T::scale(k, images[i]),
                   [&] { return "k=" + to_string(k) + " v=" + to_string(test_vectors[i]); });
  return r;
}

template <complete_idempotent_semiring S, class Map>
Report check_a_linear(const Map& map, const std::vector<Vector<S>>& test_vectors, const std::vector<S>& scalars) {
  return check_a_linear(map, std::span<const Vector<S>>(test_vectors), std::span<const S>(scalars));
}

/// Finite sample of the graph of a map p: V -> W.
template <complete_idempotent_semiring S>
class LinearMapSample {
 public:
  using Pair = std::pair<Vector<S>, Vector<S>>;

  explicit LinearMapSample(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (pairs_[i].first.dim() != pairs_[0].first.dim() || pairs_[i].second.dim() != pairs_[0].second.dim())
        throw DimensionError("graph sample pairs of mixed dimension");
      for (std::size_t j = 0; j < i; ++j)
        if (pairs_[i].first == pairs_[j].first)
          throw DomainError("graph sample repeats the input " + to_string(pairs_[i].first));
    }
  }

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

 private:
  std::vector<Pair> pairs_;
};

/// Whether the sampled graph contains the coordinatewise sup of each of its
/// nonempty subsets. The witness is a smallest violating subset.
template <complete_idempotent_semiring S>
Report graph_sup_closed(const LinearMapSample<S>& g) {
  if (g.size() == 0) throw DomainError("graph sample is empty");
  detail::require_enumerable(g.size(), "graph sample");
  const auto& pairs = g.pairs();
  const std::size_t in_dim = pairs.front().first.dim(), out_dim = pairs.front().second.dim();

  Report r;
  auto& closed = r.check("graph closed under sups");
  for (auto mask : detail::masks_by_size(g.size())) {
    Vector<S> in = Vector<S>::zero(in_dim), out = Vector<S>::zero(out_dim);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) {
        in = oplus(in, pairs[i].first);
        out = oplus(out, pairs[i].second);
      }
    bool found = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) { return p.first == in && p.second == out; });
    closed.expect(found, [&] {
      std::string w = "subset {";
      bool first = true;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) {
          w += (first ? "" : ", ") + to_string(pairs[i].first) + "->" + to_string(pairs[i].second);
          first = false;
        }
      return w + "} has sup " + to_string(in) + "->" + to_string(out) + " outside the graph";
    });
  }
  return r;
}

}  // namespace idem
