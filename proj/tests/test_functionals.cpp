#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "idem/boolean.hpp"
#include "idem/functionals.hpp"
#include "idem/random.hpp"
#include "oracles.hpp"

using idem::Boolean;
using idem::Extended;
using idem::FinVector;
using idem::FunctionalRep;

namespace {

const Extended bot = Extended::bottom();
const Extended top = Extended::top();
Extended q(long v) { return Extended{v}; }

FinVector non_top(idem::Sampler& rng, std::size_t dim) {
  for (;;) {
    auto x = rng.vector(dim);
    if (!x.is_top()) return x;
  }
}

std::vector<idem::Vector<Boolean>> all_boolean_vectors(std::size_t dim) {
  std::vector<idem::Vector<Boolean>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << dim); ++m) {
    std::vector<Boolean> c;
    for (std::size_t i = 0; i < dim; ++i) c.push_back(Boolean{((m >> i) & 1) != 0});
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST(StarEval, Examples) {
  FinVector x{q(0), q(-1), q(2)}, y{q(1), q(1), q(1)};
  EXPECT_EQ(idem::star_eval(x, y), q(2));
  EXPECT_EQ(idem::star_eval(x, y), oracle::scan_star(x, y));
  EXPECT_EQ(idem::star_eval(FinVector{q(0), q(0)}, FinVector::zero(2)), bot);
  FinVector x3{bot, q(0)}, y3{q(1), q(0)};
  EXPECT_EQ(idem::star_eval(x3, y3), top);
  EXPECT_EQ(oracle::scan_star(x3, y3), top);
  EXPECT_THROW(idem::star_eval(FinVector{q(0)}, FinVector{q(0), q(1)}), idem::DimensionError);
}

TEST(StarEval, MatchesScanOracle) {
  idem::Sampler rng(21);
  for (int i = 0; i < 2000; ++i) {
    auto dim = rng.size(1, 5);
    auto x = rng.vector(dim), y = rng.vector(dim);
    ASSERT_EQ(idem::star_eval(x, y), oracle::scan_star(x, y)) << to_string(x) << ' ' << to_string(y);
  }
}

TEST(StarEval, AntitoneInRepresenter) {
  idem::Sampler rng(22);
  for (int i = 0; i < 1000; ++i) {
    auto dim = rng.size(1, 5);
    auto x = rng.vector(dim), y = rng.vector(dim);
    auto bigger = oplus(x, rng.vector(dim));
    EXPECT_TRUE(leq(idem::star_eval(bigger, y), idem::star_eval(x, y)));
  }
}

TEST(StarEval, ALinearOnSixVectorSets) {
  idem::Sampler rng(23);
  std::vector<Extended> scalars{bot, q(-3), q(0), q(2), Extended(5, 2)};
  for (int i = 0; i < 50; ++i) {
    auto dim = rng.size(1, 5);
    auto x = rng.vector(dim);
    std::vector<FinVector> tests;
    for (int j = 0; j < 6; ++j) tests.push_back(rng.vector(dim));
    auto r = idem::check_a_linear([&](const FinVector& y) { return idem::star_eval(x, y); }, tests, scalars);
    EXPECT_TRUE(r.passed()) << r;
    EXPECT_EQ(r.find("sup preservation")->cases, 64u);
  }
}

TEST(CheckALinear, BrokenAndModuleMaps) {
  std::vector<FinVector> tests{{q(0), q(1)}, {q(2), bot}, {q(-1), q(3)}};
  std::vector<Extended> scalars{q(-1), q(0), q(4)};
  auto negate = [](const FinVector& v) {
    std::vector<Extended> c;
    for (const auto& e : v) c.push_back(idem::conjugate(e));
    return FinVector(std::move(c));
  };
  auto bad = idem::check_a_linear(negate, tests, scalars);
  ASSERT_FALSE(bad.passed());
  EXPECT_FALSE(bad.first_failure()->witness.empty());

  auto scale3 = [](const FinVector& v) { return otimes(q(3), v); };
  EXPECT_TRUE(idem::check_a_linear(scale3, tests, scalars).passed());
}

TEST(Representer, Examples) {
  FinVector hidden{q(1), q(-2), q(0)};
  FunctionalRep f(hidden);
  EXPECT_EQ(idem::recover_representer(f, 3), hidden);

  auto sup_of_coords = [](const FinVector& y) { return idem::sup(y.coords()); };
  EXPECT_EQ(idem::recover_representer(sup_of_coords, 4), FinVector::constant(4, q(0)));

  FunctionalRep g(FinVector{top, q(1)});
  EXPECT_EQ(g(FinVector::unit(2, 0)), bot);
  EXPECT_EQ(idem::recover_representer(g, 2), (FinVector{top, q(1)}));
}

TEST(Representer, ZeroAndNonLinearFunctionals) {
  auto zero = [](const FinVector&) { return bot; };
  try {
    idem::recover_representer(zero, 3);
    FAIL();
  } catch (const idem::DomainError& e) {
    EXPECT_STREQ(e.what(), "zero functional has no representer in V");
  }
  EXPECT_THROW(idem::recover_representer(FunctionalRep(FinVector::top(2)), 2), idem::DomainError);

  auto doubled = [](const FinVector& y) { return otimes(y[0], y[0]); };
  std::vector<FinVector> probes{{q(2)}};
  EXPECT_THROW(idem::recover_representer(doubled, 1, probes), idem::DomainError);
}

TEST(Representer, RoundTripWithInfiniteCoordinates) {
  idem::Sampler rng(24);
  for (int i = 0; i < 500; ++i) {
    auto dim = rng.size(1, 6);
    auto x = non_top(rng, dim);
    FunctionalRep f(x);
    std::vector<FinVector> probes;
    for (int j = 0; j < 20; ++j) probes.push_back(rng.vector(dim));
    auto back = idem::recover_representer(f, dim, probes);
    ASSERT_EQ(back, x) << to_string(x);
  }
}

// Over the Boolean semifield every nonzero x gives the same functional, so
// the representer is unique only up to the functional it defines.
TEST(Representer, BooleanExhaustive) {
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    auto all = all_boolean_vectors(dim);
    for (const auto& x : all) {
      idem::Functional<Boolean> f(x);
      auto rep = idem::representer_by_supremum<Boolean>(f, all, dim);
      idem::Functional<Boolean> g(rep);
      for (const auto& y : all) EXPECT_EQ(g(y), f(y));
      auto r = idem::check_a_linear(f, all, std::vector<Boolean>{{false}, {true}});
      EXPECT_TRUE(r.passed()) << r;
      for (const auto& y : all) EXPECT_EQ(f(y), Boolean{!y.is_zero()});
    }
  }
}

TEST(Extension, Examples) {
  idem::SpanBasis<Extended> w1({FinVector{q(0), q(0)}}, 2);
  auto f = idem::extend_functional(w1, {q(0)}, 2);
  EXPECT_EQ(f.representer(), (FinVector{q(0), q(0)}));
  EXPECT_EQ(f(FinVector{q(3), q(1)}), q(3));
  EXPECT_EQ(f(FinVector{q(3), q(1)}), oracle::scan_star(f.representer(), FinVector{q(3), q(1)}));

  idem::SpanBasis<Extended> w2({FinVector{q(0), bot}}, 2);
  auto g = idem::extend_functional(w2, {q(2)}, 2);
  EXPECT_EQ(g(FinVector{q(0), bot}), q(2));
  EXPECT_EQ(oracle::scan_star(g.representer(), FinVector{q(0), bot}), q(2));
  EXPECT_EQ(g.representer(), (FinVector{q(-2), bot}));
  // (-2, +inf) extends the same values; the closed form picks the least one.
  EXPECT_EQ(FunctionalRep(FinVector{q(-2), top})(FinVector{q(0), bot}), q(2));

  idem::SpanBasis<Extended> w3({FinVector{q(0), q(0)}, FinVector{q(1), q(1)}}, 2);
  try {
    idem::extend_functional(w3, {q(0), q(0)}, 2);
    FAIL();
  } catch (const idem::ExtensionError& e) {
    // candidate representer (1, 1) gives -1 at (0, 0)
    EXPECT_EQ(e.witness(), 0u);
    EXPECT_NE(std::string(e.what()).find("values do not define an a-linear functional on W"), std::string::npos);
  }
}

TEST(Extension, DimensionErrors) {
  idem::SpanBasis<Extended> w({FinVector{q(0), q(0)}}, 2);
  EXPECT_THROW(idem::extend_functional(w, {q(0), q(1)}, 2), idem::DimensionError);
  EXPECT_THROW(idem::extend_functional(w, {q(0)}, 3), idem::DimensionError);
}

TEST(Extension, ConsistentValuesRestrictExactly) {
  idem::Sampler rng(25);
  for (int i = 0; i < 500; ++i) {
    auto dim = rng.size(2, 6);
    auto hidden = non_top(rng, dim);
    std::vector<FinVector> gens;
    for (auto n = rng.size(1, 4); n > 0; --n) gens.push_back(rng.vector(dim));
    idem::SpanBasis<Extended> w(gens, dim);
    if (w.count() == 0) continue;
    std::vector<Extended> values;
    for (const auto& g : w.generators()) values.push_back(idem::star_eval(hidden, g));
    auto f = idem::extend_functional(w, values, dim);
    for (std::size_t g = 0; g < w.count(); ++g) ASSERT_EQ(f(w[g]), values[g]);
    // the extension is the largest one: it lies above the hidden functional
    for (int j = 0; j < 10; ++j) {
      auto y = rng.vector(dim);
      EXPECT_TRUE(leq(idem::star_eval(hidden, y), f(y)));
    }
  }
}

TEST(Extension, PerturbedValuesEitherExtendOrNameAWitness) {
  idem::Sampler rng(26);
  int rejected = 0;
  for (int i = 0; i < 500; ++i) {
    auto dim = rng.size(2, 5);
    auto hidden = rng.finite_vector(dim);
    std::vector<FinVector> gens;
    for (auto n = rng.size(2, 4); n > 0; --n) gens.push_back(rng.finite_vector(dim));
    idem::SpanBasis<Extended> w(gens, dim);
    std::vector<Extended> values;
    for (const auto& g : w.generators()) values.push_back(idem::star_eval(hidden, g));
    auto j = rng.size(0, w.count() - 1);
    values[j] = otimes(values[j], q(rng.coin() ? 1 : -1));
    try {
      auto f = idem::extend_functional(w, values, dim);
      for (std::size_t g = 0; g < w.count(); ++g) EXPECT_EQ(f(w[g]), values[g]);
    } catch (const idem::ExtensionError& e) {
      ++rejected;
      FinVector x = FinVector::zero(dim);
      for (std::size_t g = 0; g < w.count(); ++g) x = oplus(x, otimes(idem::conjugate(values[g]), w[g]));
      EXPECT_NE(idem::star_eval(x, w[e.witness()]), values[e.witness()]);
    }
  }
  EXPECT_GT(rejected, 50);
}

TEST(Separation, Examples) {
  FinVector a{q(0), q(0)}, b{q(1), q(0)};
  auto f = idem::separate_points(a, b);
  EXPECT_EQ(f.representer(), a);
  EXPECT_EQ(f(a), q(0));
  EXPECT_EQ(f(b), q(1));
  EXPECT_EQ(oracle::scan_star(a, b), q(1));

  auto g = idem::separate_points(b, a);
  EXPECT_EQ(idem::star_eval(b, a), idem::star_eval(b, b));
  EXPECT_EQ(g.representer(), a);
  EXPECT_EQ(g(b), q(1));
  EXPECT_EQ(g(a), q(0));

  // From the zero vector x*(x) = -inf and x*(y) = +inf already differ;
  // y* separates as well.
  FinVector y{q(0), bot};
  auto h = idem::separate_points(FinVector::zero(2), y);
  EXPECT_EQ(h.representer(), FinVector::zero(2));
  EXPECT_NE(h(y), h(FinVector::zero(2)));
  FunctionalRep ys(y);
  EXPECT_EQ(ys(y), q(0));
  EXPECT_EQ(ys(FinVector::zero(2)), bot);
}

TEST(Separation, EqualPointsRejected) {
  try {
    idem::separate_points(FinVector{q(1)}, FinVector{q(1)});
    FAIL();
  } catch (const idem::DomainError& e) {
    EXPECT_STREQ(e.what(), "points are equal; no separating functional exists");
  }
}

TEST(Separation, TotalOnRandomPairs) {
  idem::Sampler rng(27);
  int fallback = 0;
  for (int i = 0; i < 1000; ++i) {
    auto dim = rng.size(1, 5);
    auto x = rng.vector(dim), y = rng.vector(dim);
    if (x == y) continue;
    auto f = idem::separate_points(x, y);
    ASSERT_NE(f(x), f(y)) << to_string(x) << ' ' << to_string(y);
    fallback += f.representer() == y && idem::star_eval(x, x) == idem::star_eval(x, y);
  }
  EXPECT_GT(fallback, 0);
}

TEST(PointwiseSup, Examples) {
  FunctionalRep f(FinVector{q(0), q(5)}), g(FinVector{q(5), q(0)});
  auto p = idem::pointwise_sup(std::vector<FunctionalRep>{f, g});
  EXPECT_EQ(p.representer(), (FinVector{q(0), q(0)}));
  FinVector probe{q(1), q(1)};
  EXPECT_EQ(p(probe), q(1));
  EXPECT_EQ(p(probe), oplus(f(probe), g(probe)));
  EXPECT_EQ(idem::pointwise_sup(std::vector<FunctionalRep>{f}), f);
  EXPECT_EQ(idem::pointwise_sup(std::vector<FunctionalRep>{f, f}), f);
  EXPECT_THROW(idem::pointwise_sup(std::vector<FunctionalRep>{}), idem::DomainError);
  EXPECT_THROW(idem::pointwise_sup(std::vector<FunctionalRep>{f, FunctionalRep(FinVector{q(0)})}),
               idem::DimensionError);
}

TEST(PointwiseSup, AgreesWithFamilyOnProbes) {
  idem::Sampler rng(28);
  for (int i = 0; i < 200; ++i) {
    auto dim = rng.size(1, 6);
    std::vector<FunctionalRep> fs;
    for (auto n = rng.size(1, 5); n > 0; --n) fs.emplace_back(rng.vector(dim));
    auto p = idem::pointwise_sup(fs);
    for (int j = 0; j < 50; ++j) {
      auto y = rng.vector(dim);
      Extended best = bot;
      for (const auto& f : fs) best = oplus(best, f(y));
      ASSERT_EQ(p(y), best);
    }
  }
}

TEST(ClosedGraph, SupClosedSampleOfStar) {
  idem::Sampler rng(29);
  for (int i = 0; i < 20; ++i) {
    auto dim = rng.size(2, 4);
    auto x = rng.vector(dim);
    std::set<std::vector<Extended>> seen;
    std::vector<FinVector> base{rng.finite_vector(dim), rng.finite_vector(dim), rng.finite_vector(dim)};
    std::vector<idem::LinearMapSample<Extended>::Pair> pairs;
    for (std::uint64_t m = 0; m < 8; ++m) {
      FinVector v = FinVector::zero(dim);
      for (std::size_t b = 0; b < 3; ++b)
        if (m & (std::uint64_t{1} << b)) v = oplus(v, base[b]);
      std::vector<Extended> key(v.begin(), v.end());
      if (seen.insert(key).second) pairs.emplace_back(v, FinVector{idem::star_eval(x, v)});
    }
    auto r = idem::graph_sup_closed(idem::LinearMapSample<Extended>(pairs));
    EXPECT_TRUE(r.passed()) << r;
    EXPECT_EQ(r.checks().front().cases, (std::size_t{1} << pairs.size()) - 1);
  }
}

TEST(ClosedGraph, BrokenSampleAndSingleton) {
  idem::LinearMapSample<Extended> g({{FinVector{q(0), bot}, FinVector{q(0)}}, {FinVector{bot, q(0)}, FinVector{q(0)}}});
  auto r = idem::graph_sup_closed(g);
  ASSERT_FALSE(r.passed());
  EXPECT_NE(r.first_failure()->witness.find("(0, 0)"), std::string::npos);

  idem::LinearMapSample<Extended> one({{FinVector{q(1), q(2)}, FinVector{q(3)}}});
  EXPECT_TRUE(idem::graph_sup_closed(one).passed());

  EXPECT_THROW(idem::LinearMapSample<Extended>({{FinVector{q(1)}, FinVector{q(1)}}, {FinVector{q(1)}, FinVector{q(2)}}}),
               idem::DomainError);
}
