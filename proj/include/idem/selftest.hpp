#pragma once

// Randomized property suites for every module, aggregated into a
// deterministic scoreboard (one row per law family).

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "idem/functionals.hpp"
#include "idem/order.hpp"
#include "idem/random.hpp"
#include "idem/report.hpp"
#include "idem/semialgebra.hpp"
#include "idem/semimodule.hpp"
#include "idem/semiring.hpp"

namespace idem {

struct SelftestOptions {
  std::uint64_t seed = 42;
  std::size_t max_dim = 5;
  std::size_t samples = 200;
};

struct Scoreboard {
  std::vector<Check> suites;

  bool passed() const {
    for (const auto& s : suites)
      if (!s.passed) return false;
    return true;
  }
};

namespace selftest {

inline void absorb(Check& into, const Report& r) {
  for (const auto& c : r.checks()) {
    into.cases += c.cases;
    if (!c.passed && into.passed) {
      into.passed = false;
      into.witness = c.name + ": " + c.witness;
    }
  }
}

/// A random representer whose functional is not identically 𝟎.
inline FinVector nonzero_representer(Sampler& rng, std::size_t dim) {
  for (;;) {
    auto x = rng.vector(dim);
    if (!x.is_top()) return x;
  }
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

inline Check semiring_boolean(Sampler&, const SelftestOptions&) {
  Check c{"semiring axioms: boolean semifield"};
  absorb(c, check_semiring_axioms(boolean_semifield()));
  return c;
}

inline Check semiring_max_plus(Sampler& rng, const SelftestOptions& o) {
  Check c{"semiring axioms: max-plus"};
  absorb(c, check_semiring_axioms(completed_max_plus(), {Extended::bottom(), Extended{-1}, Extended{0}, Extended{2},
                                                         Extended::top()}));
  for (std::size_t n = 0; n < o.samples / 10 + 1; ++n) {
    std::vector<Extended> completed, bounded;
    for (int i = 0; i < 5; ++i) {
      completed.push_back(rng.scalar());
      bounded.push_back(rng.bounded_scalar());
    }
    absorb(c, check_semiring_axioms(completed_max_plus(), std::span<const Extended>(completed)));
    absorb(c, check_semiring_axioms(max_plus(), std::span<const Extended>(bounded)));
  }
  return c;
}

inline Check b_space(Sampler& rng, const SelftestOptions& o) {
  Check c{"b-space laws"};
  for (std::size_t n = 0; n < o.samples / 10 + 1; ++n) {
    auto dim = rng.size(1, o.max_dim);
    std::vector<FinVector> xs;
    for (int i = 0; i < 5; ++i) xs.push_back(rng.vector(dim));
    std::vector<Extended> ks{rng.scalar(), rng.scalar(), rng.scalar()};
    absorb(c, check_b_space_axioms(xs, ks));
  }
  return c;
}

inline Check projection(Sampler& rng, const SelftestOptions& o) {
  Check c{"projection onto spans"};
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto dim = rng.size(1, o.max_dim);
    std::vector<FinVector> gens;
    for (std::size_t g = rng.size(1, 3); g > 0; --g) gens.push_back(rng.vector(dim));
    SpanBasis<Extended> w(gens, dim);
    auto y = rng.vector(dim);
    auto p = project_onto_span(y, w);
    auto again = project_onto_span(p.projection, w);
    auto bigger = project_onto_span(oplus(y, rng.vector(dim)), w);
    c.expect(leq(p.projection, y) && again.member && again.projection == p.projection &&
                 leq(p.projection, bigger.projection),
             [&] { return "y=" + to_string(y); });
  }
  return c;
}

inline Check representer_round_trip(Sampler& rng, const SelftestOptions& o) {
  Check c{"representer round trip"};
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto dim = rng.size(1, o.max_dim);
    auto x = nonzero_representer(rng, dim);
    FunctionalRep f(x);
    auto recovered = recover_representer(f, dim);
    bool agree = recovered == x;
    for (int p = 0; p < 10 && agree; ++p) {
      auto y = rng.vector(dim);
      agree = star_eval(recovered, y) == f(y);
    }
    c.expect(agree, [&] { return "x=" + to_string(x) + " recovered " + to_string(recovered); });
  }
  return c;
}

inline Check star_a_linear(Sampler& rng, const SelftestOptions& o) {
  Check c{"a-linearity of x*"};
  for (std::size_t n = 0; n < o.samples / 4 + 1; ++n) {
    auto dim = rng.size(1, o.max_dim);
    auto x = rng.vector(dim);
    std::vector<FinVector> tests;
    for (int i = 0; i < 6; ++i) tests.push_back(rng.vector(dim));
    std::vector<Extended> ks;
    for (int i = 0; i < 5; ++i) ks.push_back(rng.bounded_scalar());
    absorb(c, check_a_linear([&](const FinVector& y) { return star_eval(x, y); }, tests, ks));
  }
  return c;
}

inline Check star_antitone(Sampler& rng, const SelftestOptions& o) {
  Check c{"x* antitone in x"};
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto dim = rng.size(1, o.max_dim);
    auto x = rng.vector(dim);
    auto bigger = oplus(x, rng.vector(dim));
    auto y = rng.vector(dim);
    c.expect(leq(star_eval(bigger, y), star_eval(x, y)),
             [&] { return "x=" + to_string(x) + " x'=" + to_string(bigger) + " y=" + to_string(y); });
  }
  return c;
}

inline Check extension(Sampler& rng, const SelftestOptions& o) {
  Check c{"functional extension"};
  const std::size_t hi = o.max_dim < 2 ? 2 : o.max_dim;
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto dim = rng.size(2, hi);
    auto hidden = rng.vector(dim);
    std::vector<FinVector> gens;
    for (std::size_t g = rng.size(1, 4); g > 0; --g) gens.push_back(rng.vector(dim));
    SpanBasis<Extended> w(gens, dim);
    std::vector<Extended> values;
    for (const auto& g : w.generators()) values.push_back(star_eval(hidden, g));
    bool ok = true;
    auto f = extend_functional(w, values, dim);
    for (std::size_t i = 0; i < w.count(); ++i) ok = ok && f(w[i]) == values[i];

    // f(1⊙w) = 1⊙f(w) for any linear f, so repeating a finite value on 1⊙w must be rejected.
    if (w.count() > 0 && values[0].is_finite() && otimes(Extended{1}, w[0]) != w[0]) {
      auto bad_gens = w.generators();
      bad_gens.push_back(otimes(Extended{1}, w[0]));
      auto bad_values = values;
      bad_values.push_back(values[0]);
      try {
        extend_functional(SpanBasis<Extended>(bad_gens, dim), bad_values, dim);
        ok = false;
      } catch (const ExtensionError&) {
      }
    }
    c.expect(ok, [&] { return "hidden=" + to_string(hidden) + " W=" + detail::describe_set(w.generators()); });
  }
  return c;
}

inline Check separation(Sampler& rng, const SelftestOptions& o) {
  Check c{"point separation"};
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto dim = rng.size(1, o.max_dim);
    auto x = rng.vector(dim);
    auto y = rng.vector(dim);
    if (x == y) continue;
    auto f = separate_points(x, y);
    c.expect(f(x) != f(y), [&] { return "x=" + to_string(x) + " y=" + to_string(y); });
  }
  return c;
}

inline Check pointwise(Sampler& rng, const SelftestOptions& o) {
  Check c{"pointwise sup of functionals"};
  for (std::size_t n = 0; n < o.samples / 2 + 1; ++n) {
    auto dim = rng.size(1, o.max_dim);
    std::vector<FunctionalRep> fs;
    for (std::size_t k = rng.size(1, 5); k > 0; --k) fs.emplace_back(rng.vector(dim));
    auto p = pointwise_sup(fs);
    for (int probe = 0; probe < 20; ++probe) {
      auto y = rng.vector(dim);
      std::vector<Extended> vals;
      for (const auto& f : fs) vals.push_back(f(y));
      c.expect(p(y) == sup(vals), [&] { return "y=" + to_string(y); });
    }
  }
  return c;
}

inline Check closed_graph(Sampler& rng, const SelftestOptions& o) {
  Check c{"sup-closed graphs"};
  for (std::size_t n = 0; n < o.samples / 10 + 1; ++n) {
    auto dim = rng.size(1, o.max_dim);
    auto x = rng.vector(dim);
    FinVector gens[3] = {rng.vector(dim), rng.vector(dim), rng.vector(dim)};
    std::vector<LinearMapSample<Extended>::Pair> pairs;
    for (unsigned mask = 0; mask < 8; ++mask) {
      auto in = FinVector::zero(dim);
      for (unsigned i = 0; i < 3; ++i)
        if (mask & (1u << i)) in = oplus(in, gens[i]);
      bool seen = false;
      for (const auto& p : pairs) seen = seen || p.first == in;
      if (!seen) pairs.emplace_back(in, FinVector{star_eval(x, in)});
    }
    absorb(c, graph_sup_closed(LinearMapSample<Extended>(std::move(pairs))));
  }
  LinearMapSample<Extended> broken({{FinVector{Extended{0}, Extended::bottom()}, FinVector{Extended{0}}},
                                    {FinVector{Extended::bottom(), Extended{0}}, FinVector{Extended{0}}}});
  c.expect(!graph_sup_closed(broken).passed(), [] { return std::string("non-closed sample accepted"); });
  return c;
}

inline Check residual_identity(Sampler& rng, const SelftestOptions& o) {
  Check c{"residual identity x*(y) = 1*(y x^-1)"};
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto size = rng.size(1, o.max_dim);
    AlgebraElement x(rng.finite_vector(size)), y(rng.vector(size));
    auto r = check_prop4(x, y);
    c.expect(r.holds, [&] { return "x=" + to_string(x) + " y=" + to_string(y); });
  }
  return c;
}

inline Check scalar_product_representer(Sampler& rng, const SelftestOptions& o) {
  Check c{"scalar-product representer"};
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto size = rng.size(1, o.max_dim);
    auto labels = default_labels(size);
    AlgebraElement x(rng.finite_vector(size).with_labels(labels));
    std::vector<AlgebraElement> probes;
    for (int p = 0; p < 10; ++p) probes.emplace_back(rng.vector(size).with_labels(labels));
    auto r = riesz_representer([&](const AlgebraElement& y) { return scalar_product(y, x); }, labels,
                               std::span<const AlgebraElement>(probes));
    c.expect(r.element == x && r.bounded, [&] { return "x=" + to_string(x); });
  }
  return c;
}

inline Check scalar_product_laws(Sampler& rng, const SelftestOptions& o) {
  Check c{"scalar-product laws"};
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto size = rng.size(1, o.max_dim);
    AlgebraElement a(rng.vector(size)), b(rng.vector(size)), x(rng.vector(size));
    auto k = rng.bounded_scalar();
    bool ok = scalar_product(a, b) == scalar_product(b, a) &&
              scalar_product(alg_add(a, b), x) == oplus(scalar_product(a, x), scalar_product(b, x)) &&
              scalar_product(alg_scale(k, a), x) == otimes(k, scalar_product(a, x)) &&
              scalar_product(AlgebraElement::one(a.labels()), a) == one_star(a);
    c.expect(ok, [&] { return "a=" + to_string(a) + " b=" + to_string(b) + " x=" + to_string(x); });
  }
  return c;
}

inline FiniteIS random_poset(Sampler& rng, std::size_t max_size) {
  auto n = rng.size(0, max_size);
  std::vector<FiniteIS::Relation> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.below(3) == 0) rel.emplace_back(i, j);
  return FiniteIS(default_labels(n), rel);
}

inline Check completion(Sampler& rng, const SelftestOptions& o) {
  Check c{"completion by cuts"};
  for (std::size_t n = 0; n < o.samples / 4 + 1; ++n) {
    auto s = random_poset(rng, 6);
    auto dm = dm_completion(s);
    auto b = b_completion(s);
    auto twice = dm_completion(dm.completed);
    bool ok = is_complete_lattice(dm.completed) && is_order_embedding(s, dm.completed, dm.embedding) &&
              order_isomorphic(twice.completed, dm.completed) &&
              dm.completed.size() - b.completed.size() == (s.size() > 0 && !s.top() ? 1u : 0u);
    c.expect(ok, [&] { return "poset " + format_poset(s); });
  }
  return c;
}

}  // namespace selftest

inline Scoreboard run_selftest(const SelftestOptions& o) {
  using Suite = Check (*)(Sampler&, const SelftestOptions&);
  const Suite suites[] = {
      selftest::semiring_boolean,     selftest::semiring_max_plus, selftest::b_space,
      selftest::projection,           selftest::representer_round_trip, selftest::star_a_linear,
      selftest::star_antitone,        selftest::extension,        selftest::separation,
      selftest::pointwise,            selftest::closed_graph,     selftest::residual_identity,
      selftest::scalar_product_representer, selftest::scalar_product_laws, selftest::completion,
  };
  Scoreboard board;
  std::uint64_t stream = 0;
  for (auto suite : suites) {
    Sampler rng(o.seed * 1000003u + stream++);
    board.suites.push_back(suite(rng, o));
  }
  return board;
}

inline void write_scoreboard(std::ostream& os, const Scoreboard& board, const SelftestOptions& o) {
  os << "selftest seed=" << o.seed << " dim=" << o.max_dim << " samples=" << o.samples << '\n';
  std::size_t passed = 0;
  for (const auto& s : board.suites) {
    os << (s.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(40) << s.name << std::right << std::setw(9)
       << s.cases << " cases\n";
    if (!s.passed) os << "      witness: " << s.witness << '\n';
    passed += s.passed ? 1 : 0;
  }
  os << "result: " << (board.passed() ? "PASS" : "FAIL") << " (" << passed << '/' << board.suites.size()
     << " suites)\n";
}

}  // namespace idem
