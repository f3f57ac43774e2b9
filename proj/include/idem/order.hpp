#pragma once

// Finite partial orders, the standard order of an idempotent semigroup, and
// completion by cuts.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idem/error.hpp"

namespace idem {

/// A finite partially ordered set with labeled elements. When every pair has
/// a join (`is_semilattice()`), it is an idempotent semigroup under x⊕y = sup{x,y}.
class FiniteIS {
 public:
  using Relation = std::pair<std::size_t, std::size_t>;  // (lower, upper)

  FiniteIS() = default;

  /// Takes the reflexive-transitive closure of `relations`.
  /// Throws OrderError if the closure is not antisymmetric.
  FiniteIS(std::vector<std::string> labels, std::span<const Relation> relations)
      : labels_(std::move(labels)), leq_(labels_.size(), std::vector<bool>(labels_.size(), false)) {
    check_labels();
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
    for (auto [a, b] : relations) {
      if (a >= n || b >= n) throw OrderError("relation refers to an element out of range");
      leq_[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k][j]) leq_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq_[i][j] && leq_[j][i])
          throw OrderError("not a partial order: '" + labels_[i] + "' and '" + labels_[j] + "' form a cycle");
  }

  FiniteIS(std::vector<std::string> labels, std::initializer_list<Relation> relations)
      : FiniteIS(std::move(labels), std::span<const Relation>(relations.begin(), relations.size())) {}

  /// Uses `leq` as given; it must already be reflexive, antisymmetric and transitive.
  static FiniteIS from_matrix(std::vector<std::string> labels, std::vector<std::vector<bool>> leq) {
    FiniteIS s;
    s.labels_ = std::move(labels);
    s.leq_ = std::move(leq);
    s.check_labels();
    const std::size_t n = s.size();
    if (s.leq_.size() != n) throw OrderError("order matrix does not match the element count");
    for (const auto& row : s.leq_)
      if (row.size() != n) throw OrderError("order matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.leq_[i][i]) throw OrderError("not a partial order: relation is not reflexive");
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && s.leq_[i][j] && s.leq_[j][i]) throw OrderError("not a partial order: relation is not antisymmetric");
        for (std::size_t k = 0; k < n; ++k)
          if (s.leq_[i][j] && s.leq_[j][k] && !s.leq_[i][k])
            throw OrderError("not a partial order: relation is not transitive");
      }
    }
    return s;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::size_t index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw OrderError("unknown element '" + std::string(label) + "'");
  }

  bool leq(std::size_t i, std::size_t j) const { return leq_.at(i).at(j); }

  /// Least upper bound of a set of elements; nullopt if it does not exist.
  /// The join of the empty set is the bottom element.
  std::optional<std::size_t> join_of(std::span<const std::size_t> xs) const {
    std::vector<std::size_t> uppers;
    for (std::size_t u = 0; u < size(); ++u)
      if (std::all_of(xs.begin(), xs.end(), [&](std::size_t x) { return leq(x, u); })) uppers.push_back(u);
    return least_of(uppers);
  }

  std::optional<std::size_t> meet_of(std::span<const std::size_t> xs) const {
    std::vector<std::size_t> lowers;
    for (std::size_t l = 0; l < size(); ++l)
      if (std::all_of(xs.begin(), xs.end(), [&](std::size_t x) { return leq(l, x); })) lowers.push_back(l);
    for (auto c : lowers)
      if (std::all_of(lowers.begin(), lowers.end(), [&](std::size_t l) { return leq(l, c); })) return c;
    return std::nullopt;
  }

  std::optional<std::size_t> join(std::size_t a, std::size_t b) const {
    const std::size_t xs[] = {a, b};
    return join_of(xs);
  }

  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const {
    const std::size_t xs[] = {a, b};
    return meet_of(xs);
  }

  std::optional<std::size_t> bottom() const { return join_of({}); }
  std::optional<std::size_t> top() const { return meet_of({}); }

  bool is_semilattice() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (!join(i, j)) return false;
    return true;
  }

  /// Pairs (a, b) with a < b and nothing strictly between, in index order.
  std::vector<Relation> covers() const {
    std::vector<Relation> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) {
        if (a == b || !leq(a, b)) continue;
        bool direct = true;
        for (std::size_t c = 0; c < size() && direct; ++c)
          if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
        if (direct) out.emplace_back(a, b);
      }
    return out;
  }

 private:
  std::optional<std::size_t> least_of(const std::vector<std::size_t>& candidates) const {
    for (auto c : candidates)
      if (std::all_of(candidates.begin(), candidates.end(), [&](std::size_t u) { return leq(c, u); })) return c;
    return std::nullopt;
  }

  void check_labels() const {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw OrderError("empty element label");
      if (!seen.insert(l).second) throw OrderError("duplicate element '" + l + "'");
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

/// x ⪯ y in the standard order.
inline bool standard_order(const FiniteIS& s, std::string_view x, std::string_view y) {
  return s.leq(s.index_of(x), s.index_of(y));
}

/// Completed lattice plus the order embedding of the original elements.
struct CompletionResult {
  FiniteIS completed;
  std::vector<std::size_t> embedding;  // original index -> completed index
};

/// Largest input accepted by the completions (cuts are 64-bit masks).
inline constexpr std::size_t max_completion_size = 64;

namespace detail {

using Cut = std::uint64_t;

inline std::vector<Cut> principal_cuts(const FiniteIS& s) {
  if (s.size() > max_completion_size)
    throw DomainError("completion is limited to " + std::to_string(max_completion_size) + " elements");
  std::vector<Cut> down(s.size(), 0);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (s.leq(y, x)) down[x] |= Cut{1} << y;
  return down;
}

inline Cut full_cut(std::size_t n) { return n == 64 ? ~Cut{0} : (Cut{1} << n) - 1; }

/// Closes `seed` under intersection with the principal cuts.
inline std::set<Cut> close_under_intersection(std::set<Cut> seed, const std::vector<Cut>& principals) {
  std::vector<Cut> work(seed.begin(), seed.end());
  while (!work.empty()) {
    Cut c = work.back();
    work.pop_back();
    for (Cut p : principals)
      if (seed.insert(c & p).second) work.push_back(c & p);
  }
  return seed;
}

/// Lattice of the given cuts ordered by inclusion, labeled after the
/// original elements where a cut is principal.
inline CompletionResult lattice_of_cuts(const FiniteIS& s, const std::set<Cut>& cut_set,
                                        const std::vector<Cut>& principals) {
  std::vector<Cut> cuts(cut_set.begin(), cut_set.end());
  std::stable_sort(cuts.begin(), cuts.end(), [](Cut a, Cut b) {
    auto pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::map<Cut, std::size_t> principal_of;
  for (std::size_t x = 0; x < principals.size(); ++x) principal_of.emplace(principals[x], x);

  const Cut full = full_cut(s.size());
  std::vector<std::string> labels;
  std::size_t synthetic = 0;
  for (Cut c : cuts) {
    if (auto it = principal_of.find(c); it != principal_of.end())
      labels.push_back(s.label(it->second));
    else if (c == 0)
      labels.push_back("_bot");
    else if (c == full)
      labels.push_back("_top");
    else
      labels.push_back("_cut" + std::to_string(synthetic++));
  }

  const std::size_t m = cuts.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = (cuts[i] & ~cuts[j]) == 0;

  CompletionResult result{FiniteIS::from_matrix(std::move(labels), std::move(leq)), {}};
  for (Cut p : principals)
    result.embedding.push_back(static_cast<std::size_t>(std::find(cuts.begin(), cuts.end(), p) - cuts.begin()));
  return result;
}

}  // namespace detail

/// Normal completion (Dedekind-MacNeille): the lattice of cuts, i.e. sets
/// equal to the lower bounds of their upper bounds, ordered by inclusion.
/// Every cut is an intersection of principal down-sets, the empty
/// intersection being the whole set.
inline CompletionResult dm_completion(const FiniteIS& s) {
  const auto principals = detail::principal_cuts(s);
  auto cuts = detail::close_under_intersection({detail::full_cut(s.size())}, principals);
  return detail::lattice_of_cuts(s, cuts, principals);
}

/// Bounded completion: only cuts of subsets with an upper bound (and of the
/// empty set). If s has a greatest element this is the normal completion;
/// otherwise the normal completion is this one plus an adjoined top.
inline CompletionResult b_completion(const FiniteIS& s) {
  const auto principals = detail::principal_cuts(s);
  std::set<detail::Cut> seed(principals.begin(), principals.end());
  if (s.size() == 0) seed.insert(0);  // ⊕∅ must exist
  auto cuts = detail::close_under_intersection(std::move(seed), principals);

  auto normal = detail::close_under_intersection({detail::full_cut(s.size())}, principals);
  auto with_top = cuts;
  with_top.insert(detail::full_cut(s.size()));
  if (with_top != normal) throw std::logic_error("bounded completion differs from the normal completion by more than the top");

  return detail::lattice_of_cuts(s, cuts, principals);
}

/// Every subset has a join and a meet. For a finite poset it suffices to
/// check the empty set and all pairs.
inline bool is_complete_lattice(const FiniteIS& s) {
  if (!s.bottom() || !s.top()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!s.join(i, j) || !s.meet(i, j)) return false;
  return true;
}

/// Whether `e` is injective and satisfies a ⪯ b iff e(a) ⪯ e(b).
inline bool is_order_embedding(const FiniteIS& from, const FiniteIS& to, std::span<const std::size_t> e) {
  if (e.size() != from.size()) return false;
  for (std::size_t a = 0; a < from.size(); ++a) {
    if (e[a] >= to.size()) return false;
    for (std::size_t b = 0; b < from.size(); ++b) {
      if (a != b && e[a] == e[b]) return false;
      if (from.leq(a, b) != to.leq(e[a], e[b])) return false;
    }
  }
  return true;
}

namespace detail {

inline bool extend_isomorphism(const FiniteIS& a, const FiniteIS& b, std::vector<std::size_t>& map,
                               std::vector<bool>& used, std::size_t next,
                               const std::vector<std::pair<std::size_t, std::size_t>>& sig_a,
                               const std::vector<std::pair<std::size_t, std::size_t>>& sig_b) {
  if (next == a.size()) return true;
  for (std::size_t c = 0; c < b.size(); ++c) {
    if (used[c] || sig_a[next] != sig_b[c]) continue;
    bool ok = true;
    for (std::size_t p = 0; p < next && ok; ++p)
      ok = a.leq(p, next) == b.leq(map[p], c) && a.leq(next, p) == b.leq(c, map[p]);
    if (!ok) continue;
    map[next] = c;
    used[c] = true;
    if (extend_isomorphism(a, b, map, used, next + 1, sig_a, sig_b)) return true;
    used[c] = false;
  }
  return false;
}

inline std::vector<std::pair<std::size_t, std::size_t>> order_signature(const FiniteIS& s) {
  std::vector<std::pair<std::size_t, std::size_t>> sig(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s.leq(j, i)) ++sig[i].first;
      if (s.leq(i, j)) ++sig[i].second;
    }
  return sig;
}

}  // namespace detail

/// Finds an order isomorphism a -> b by backtracking; labels are ignored.
inline std::optional<std::vector<std::size_t>> order_isomorphism(const FiniteIS& a, const FiniteIS& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto sig_a = detail::order_signature(a);
  auto sig_b = detail::order_signature(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::size_t> map(a.size());
  std::vector<bool> used(b.size(), false);
  if (!detail::extend_isomorphism(a, b, map, used, 0, sig_a, sig_b)) return std::nullopt;
  return map;
}

inline bool order_isomorphic(const FiniteIS& a, const FiniteIS& b) { return order_isomorphism(a, b).has_value(); }

/// Reads `elements: a b c` followed by lines `a < b`. Blank lines and lines
/// starting with '#' are ignored.
inline FiniteIS parse_poset(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<FiniteIS::Relation> relations;
  bool have_header = false;
  std::map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string head;
      ls >> head;
      if (head != "elements:") throw ParseError("expected 'elements:' header", line_no, first + 1);
      for (std::string tok; ls >> tok;) {
        if (index.count(tok)) throw ParseError("duplicate element '" + tok + "'", line_no);
        index.emplace(tok, labels.size());
        labels.push_back(tok);
      }
      have_header = true;
      continue;
    }
    std::string a, op, b, extra;
    if (!(ls >> a >> op >> b) || (ls >> extra) || op != "<")
      throw ParseError("expected a relation 'x < y'", line_no, first + 1);
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw ParseError("unknown element '" + a + "'", line_no, line.find(a) + 1);
    if (ib == index.end()) throw ParseError("unknown element '" + b + "'", line_no, line.rfind(b) + 1);
    if (ia->second == ib->second) throw ParseError("strict relation between equal elements", line_no);
    relations.emplace_back(ia->second, ib->second);
  }
  if (!have_header) throw ParseError("missing 'elements:' header");
  try {
    return FiniteIS(std::move(labels), relations);
  } catch (const OrderError& e) {
    throw ParseError(e.what());
  }
}

inline FiniteIS parse_poset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_poset(in);
}

/// Writes the element list and the cover relation in the input format.
inline void write_poset(std::ostream& os, const FiniteIS& s) {
  os << "elements:";
  for (const auto& l : s.labels()) os << ' ' << l;
  os << '\n';
  for (auto [a, b] : s.covers()) os << s.label(a) << " < " << s.label(b) << '\n';
}

inline std::string format_poset(const FiniteIS& s) {
  std::ostringstream os;
  write_poset(os, s);
  return os.str();
}

}  // namespace idem
