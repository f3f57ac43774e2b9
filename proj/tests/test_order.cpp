#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "idem/order.hpp"
#include "oracles.hpp"

using idem::FiniteIS;

namespace {

FiniteIS antichain2() { return FiniteIS({"a", "b"}, {}); }

FiniteIS chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<FiniteIS::Relation> rel;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
    if (i) rel.emplace_back(i - 1, i);
  }
  return FiniteIS(labels, rel);
}

std::vector<std::string> sorted_labels(const FiniteIS& s) {
  auto l = s.labels();
  std::sort(l.begin(), l.end());
  return l;
}

// Each completed element, read back as the set of original elements below it.
std::set<std::uint64_t> cuts_of(const idem::CompletionResult& r, std::size_t n) {
  std::set<std::uint64_t> out;
  for (std::size_t c = 0; c < r.completed.size(); ++c) {
    std::uint64_t mask = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (r.completed.leq(r.embedding[x], c)) mask |= std::uint64_t{1} << x;
    out.insert(mask);
  }
  return out;
}

std::vector<std::size_t> members(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (std::uint64_t{1} << i)) out.push_back(i);
  return out;
}

}  // namespace

TEST(StandardOrder, Examples) {
  auto c = chain(3);
  EXPECT_TRUE(idem::standard_order(c, "a", "c"));
  EXPECT_FALSE(idem::standard_order(c, "c", "a"));
  auto a = antichain2();
  EXPECT_FALSE(idem::standard_order(a, "a", "b"));
  EXPECT_TRUE(idem::standard_order(a, "a", "a"));
  EXPECT_THROW(idem::standard_order(a, "a", "z"), idem::OrderError);
}

TEST(StandardOrder, MatchesJoinTest) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& s : oracle::all_posets(n)) {
      if (!s.is_semilattice()) continue;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) EXPECT_EQ(s.leq(x, y), s.join(x, y) == y);
    }
}

TEST(FiniteIS, RejectsCyclesAndBadLabels) {
  EXPECT_THROW(FiniteIS({"a", "b"}, {{0, 1}, {1, 0}}), idem::OrderError);
  EXPECT_THROW(FiniteIS({"a", "a"}, {}), idem::OrderError);
  EXPECT_THROW(FiniteIS({"a"}, {{0, 3}}), idem::OrderError);
  EXPECT_THROW(FiniteIS::from_matrix({"a", "b", "c"}, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}), idem::OrderError);
}

TEST(FiniteIS, JoinsMeetsAndCovers) {
  auto s = FiniteIS({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(s.join(1, 2), std::optional<std::size_t>(3));
  EXPECT_EQ(s.meet(1, 2), std::optional<std::size_t>(0));
  EXPECT_EQ(s.bottom(), std::optional<std::size_t>(0));
  EXPECT_EQ(s.top(), std::optional<std::size_t>(3));
  EXPECT_TRUE(s.is_semilattice());
  EXPECT_EQ(s.covers().size(), 4u);
  EXPECT_FALSE(antichain2().is_semilattice());
  EXPECT_FALSE(antichain2().join(0, 1).has_value());
}

TEST(DmCompletion, AntichainGivesFourElementLattice) {
  auto s = antichain2();
  auto r = idem::dm_completion(s);
  ASSERT_EQ(r.completed.size(), 4u);
  EXPECT_EQ(sorted_labels(r.completed), (std::vector<std::string>{"_bot", "_top", "a", "b"}));
  EXPECT_EQ(r.completed.label(r.embedding[0]), "a");
  EXPECT_EQ(r.completed.label(r.embedding[1]), "b");
  EXPECT_EQ(cuts_of(r, 2), oracle::cuts_by_enumeration(s));
  EXPECT_TRUE(idem::is_complete_lattice(r.completed));
}

TEST(DmCompletion, ChainIsAlreadyComplete) {
  auto s = chain(5);
  auto r = idem::dm_completion(s);
  EXPECT_EQ(r.completed.labels(), s.labels());
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(r.embedding[i], i);
  EXPECT_TRUE(idem::order_isomorphic(r.completed, s));
}

TEST(DmCompletion, EmptySetGivesOnePoint) {
  auto r = idem::dm_completion(FiniteIS({}, {}));
  ASSERT_EQ(r.completed.size(), 1u);
  EXPECT_EQ(r.completed.label(0), "_bot");
  EXPECT_TRUE(idem::is_complete_lattice(r.completed));
}

TEST(DmCompletion, SingletonIsItsOwnCompletion) {
  auto r = idem::dm_completion(FiniteIS({"a"}, {}));
  EXPECT_EQ(r.completed.labels(), std::vector<std::string>{"a"});
  EXPECT_EQ(cuts_of(r, 1), oracle::cuts_by_enumeration(FiniteIS({"a"}, {})));
}

TEST(DmCompletion, CutsMatchEnumerationForAllSmallPosets) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& s : oracle::all_posets(n)) {
      auto r = idem::dm_completion(s);
      ASSERT_EQ(cuts_of(r, n), oracle::cuts_by_enumeration(s)) << idem::format_poset(s);
      EXPECT_EQ(r.completed.size(), oracle::cuts_by_enumeration(s).size());
      EXPECT_TRUE(idem::is_complete_lattice(r.completed));
      EXPECT_TRUE(idem::is_order_embedding(s, r.completed, r.embedding));
    }
}

TEST(DmCompletion, IdempotentUpToIsomorphism) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& s : oracle::all_posets(n)) {
      auto once = idem::dm_completion(s).completed;
      auto twice = idem::dm_completion(once);
      EXPECT_EQ(twice.completed.size(), once.size());
      EXPECT_TRUE(idem::order_isomorphic(twice.completed, once)) << idem::format_poset(s);
    }
}

// Joins and meets that already exist, including those of the empty set,
// are carried to the same operation in the completion.
TEST(DmCompletion, EmbeddingPreservesExistingJoinsAndMeets) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& s : oracle::all_posets(n)) {
      auto r = idem::dm_completion(s);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto xs = members(mask, n);
        std::vector<std::size_t> image;
        for (auto x : xs) image.push_back(r.embedding[x]);
        if (auto j = s.join_of(xs)) {
          auto jj = r.completed.join_of(image);
          ASSERT_TRUE(jj.has_value());
          EXPECT_EQ(*jj, r.embedding[*j]);
        }
        if (auto m = s.meet_of(xs)) {
          auto mm = r.completed.meet_of(image);
          ASSERT_TRUE(mm.has_value());
          EXPECT_EQ(*mm, r.embedding[*m]);
        }
      }
    }
}

TEST(DmCompletion, BottomIsJoinOfEmptySet) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& s : oracle::all_posets(n)) {
      auto c = idem::dm_completion(s).completed;
      auto bot = c.join_of({});
      ASSERT_TRUE(bot.has_value());
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(c.leq(*bot, i));
    }
}

TEST(DmCompletion, RejectsOversizedInput) {
  std::vector<std::string> labels;
  for (int i = 0; i < 65; ++i) labels.push_back("e" + std::to_string(i));
  EXPECT_THROW(idem::dm_completion(FiniteIS(labels, {})), idem::DomainError);
}

TEST(BCompletion, ChainWithTopUnchanged) {
  auto s = chain(4);
  auto r = idem::b_completion(s);
  EXPECT_EQ(r.completed.labels(), s.labels());
  EXPECT_TRUE(idem::order_isomorphic(r.completed, idem::dm_completion(s).completed));
}

TEST(BCompletion, AntichainLacksOnlyTheTop) {
  auto s = antichain2();
  auto r = idem::b_completion(s);
  EXPECT_EQ(sorted_labels(r.completed), (std::vector<std::string>{"_bot", "a", "b"}));
  EXPECT_EQ(cuts_of(r, 2), oracle::cuts_by_enumeration(s, true));
}

TEST(BCompletion, SingletonAndEmpty) {
  EXPECT_EQ(idem::b_completion(FiniteIS({"a"}, {})).completed.labels(), std::vector<std::string>{"a"});
  EXPECT_EQ(idem::b_completion(FiniteIS({}, {})).completed.labels(), std::vector<std::string>{"_bot"});
}

TEST(BCompletion, DiffersFromNormalCompletionByAtMostTheTop) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& s : oracle::all_posets(n)) {
      auto b = idem::b_completion(s);
      auto d = idem::dm_completion(s);
      auto bc = cuts_of(b, n), dc = cuts_of(d, n);
      EXPECT_EQ(bc, oracle::cuts_by_enumeration(s, true));
      EXPECT_TRUE(std::includes(dc.begin(), dc.end(), bc.begin(), bc.end()));
      std::size_t expected = (n > 0 && !s.top()) ? 1 : 0;
      EXPECT_EQ(dc.size() - bc.size(), expected) << idem::format_poset(s);
      EXPECT_TRUE(idem::is_order_embedding(s, b.completed, b.embedding));
    }
}

TEST(Isomorphism, DistinguishesNonIsomorphicOrders) {
  auto diamond = FiniteIS({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto renamed = FiniteIS({"w", "x", "y", "z"}, {{3, 1}, {3, 0}, {1, 2}, {0, 2}});
  EXPECT_TRUE(idem::order_isomorphic(diamond, renamed));
  EXPECT_FALSE(idem::order_isomorphic(diamond, chain(4)));
  auto map = idem::order_isomorphism(diamond, renamed);
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(idem::is_order_embedding(diamond, renamed, *map));
}

TEST(PosetFormat, ParseAndRoundTrip) {
  auto s = idem::parse_poset("# a diamond\nelements: a b c d\na < b\na < c\nb < d\nc < d\n\n");
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(idem::standard_order(s, "a", "d"));
  auto again = idem::parse_poset(idem::format_poset(s));
  EXPECT_EQ(again.labels(), s.labels());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(again.leq(i, j), s.leq(i, j));
  EXPECT_EQ(idem::parse_poset("elements:\n").size(), 0u);
}

TEST(PosetFormat, Errors) {
  auto line_of = [](const char* text) {
    try {
      idem::parse_poset(text);
    } catch (const idem::ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("a < b\n"), 1u);
  EXPECT_EQ(line_of("elements: a b\na < c\n"), 2u);
  EXPECT_EQ(line_of("elements: a b\n\na << b\n"), 3u);
  EXPECT_THROW(idem::parse_poset("elements: a a\n"), idem::ParseError);
  EXPECT_THROW(idem::parse_poset("elements: a b\na < b\nb < a\n"), idem::ParseError);
  EXPECT_THROW(idem::parse_poset(""), idem::ParseError);
}
