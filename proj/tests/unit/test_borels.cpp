#include <set>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "glmn/borels.hpp"
#include "glmn/error.hpp"
#include "oracles.hpp"

using glmn::Box;
using glmn::OddRoot;
using glmn::Partition;
using glmn::Rank;
using glmn::Rational;
using glmn::SignedOddRoot;
using glmn::Weight;

namespace {

std::uint64_t binomial(int a, int b) {
  std::uint64_t r = 1;
  for (int k = 1; k <= b; ++k)
    r = r * static_cast<std::uint64_t>(a - b + k) / static_cast<std::uint64_t>(k);
  return r;
}

std::vector<Rational> Q(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST(Partition, Validation) {
  const Rank r(3, 2);
  EXPECT_THROW(Partition(r, {1, 2}), glmn::UsageError);
  EXPECT_THROW(Partition(r, {3}), glmn::UsageError);
  EXPECT_THROW(Partition(r, {1, 1, 1, 1}), glmn::UsageError);
  EXPECT_THROW(Partition(r, {1, -1}), glmn::UsageError);
  EXPECT_EQ(Partition(r, {2, 1, 0}).rows(), (std::vector<int>{2, 1}));
  EXPECT_EQ(Partition(r, {1, 1, 1, 0}).size(), 3);
  EXPECT_EQ(Partition::full(r).rows(), (std::vector<int>{2, 2, 2}));
}

TEST(Partition, TextForms) {
  const Rank r(3, 2);
  EXPECT_EQ(glmn::to_string(Partition(r)), "()");
  EXPECT_EQ(glmn::to_string(Partition(r, {2, 1})), "(2,1)");
  EXPECT_EQ(glmn::parse_partition(r, "2,1"), Partition(r, {2, 1}));
  EXPECT_EQ(glmn::parse_partition(r, "(2,1)"), Partition(r, {2, 1}));
  EXPECT_EQ(glmn::parse_partition(r, "()"), Partition(r));
  EXPECT_EQ(glmn::parse_partition(r, ""), Partition(r));
  EXPECT_THROW(glmn::parse_partition(r, "1,2"), glmn::UsageError);
  EXPECT_THROW(glmn::parse_partition(r, "2,a"), glmn::UsageError);
}

TEST(Partition, EnumerationMatchesOracle) {
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; m + n <= 8; ++n) {
      const auto ps = glmn::all_partitions(Rank(m, n));
      const auto expect = oracle::partitions(m, n);
      ASSERT_EQ(ps.size(), binomial(m + n, m));
      ASSERT_EQ(ps.size(), expect.size());
      for (std::size_t k = 0; k < ps.size(); ++k)
        EXPECT_EQ(ps[k].rows(), expect[k]);
    }
}

TEST(Partition, AddableRemovable) {
  const Rank r(3, 2);
  const Partition p(r, {2, 1});
  EXPECT_EQ(p.addable_boxes(), (std::vector<Box>{{2, 2}, {1, 3}}));
  EXPECT_EQ(p.removable_boxes(), (std::vector<Box>{{2, 1}, {1, 2}}));
  EXPECT_TRUE(p.contains({2, 1}));
  EXPECT_FALSE(p.contains({2, 2}));
  EXPECT_EQ(p.toggled({2, 2}), Partition(r, {2, 2}));
  EXPECT_THROW(p.toggled({1, 1}), glmn::UsageError);
  EXPECT_THROW(p.toggled({3, 1}), glmn::UsageError);
}

TEST(Partition, ToggleMatchesOracleEdges) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const Rank r(m, n);
      std::set<std::pair<std::vector<int>, std::vector<int>>> ours, theirs;
      for (const auto& p : glmn::all_partitions(r)) {
        for (const auto& b : p.addable_boxes())
          ours.insert({p.rows(), p.toggled(b).rows()});
        for (const auto& b : p.removable_boxes())
          ours.insert({p.toggled(b).rows(), p.rows()});
      }
      for (const auto& e : oracle::lattice_edges(m, n)) {
        const bool a_smaller = oracle::boxes(e.a).size() < oracle::boxes(e.b).size();
        theirs.insert(a_smaller ? std::pair{e.a, e.b} : std::pair{e.b, e.a});
      }
      EXPECT_EQ(ours, theirs);
    }
}

TEST(Sequence, Endpoints) {
  const Rank r(3, 2);
  EXPECT_EQ(glmn::to_string(glmn::partition_to_sequence(Partition(r))), "eeedd");
  EXPECT_EQ(glmn::to_string(glmn::partition_to_sequence(Partition::full(r))), "ddeee");
  EXPECT_EQ(glmn::sequence_to_partition(glmn::parse_sequence(r, "ddeee")), Partition::full(r));
}

TEST(Sequence, RoundTripAllPartitions) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; m + n <= 8; ++n) {
      const Rank r(m, n);
      std::set<std::string> words;
      for (const auto& p : glmn::all_partitions(r)) {
        const auto s = glmn::partition_to_sequence(p);
        words.insert(glmn::to_string(s));
        EXPECT_EQ(glmn::sequence_to_partition(s), p);
        EXPECT_EQ(glmn::sequence_from_shuffle(r, s.shuffle()), s);
        EXPECT_EQ(glmn::parse_sequence(r, glmn::to_string(s)), s);
      }
      EXPECT_EQ(words.size(), binomial(m + n, m));
    }
}

TEST(Sequence, Validation) {
  const Rank r(2, 1);
  EXPECT_THROW(glmn::parse_sequence(r, "eee"), glmn::UsageError);
  EXPECT_THROW(glmn::parse_sequence(r, "edx"), glmn::UsageError);
  using glmn::Letter;
  EXPECT_THROW(glmn::EpsDeltaSequence(r, {{Letter::Eps, 2}, {Letter::Eps, 1}, {Letter::Delta, 1}}), glmn::UsageError);
  EXPECT_THROW(glmn::sequence_from_shuffle(r, {1, 1, 2}), glmn::UsageError);
}

TEST(BoxRoot, ShippedConvention) {
  const Rank r(3, 2);
  EXPECT_EQ(glmn::box_to_root({1, 1}, r), (OddRoot{3, 1}));
  EXPECT_EQ(glmn::box_to_root({2, 1}, r), (OddRoot{3, 2}));
  EXPECT_EQ(glmn::box_to_root({1, 3}, r), (OddRoot{1, 1}));
  EXPECT_EQ(glmn::box_to_root({1, 1}, Rank(1, 1)), (OddRoot{1, 1}));
  EXPECT_THROW(glmn::box_to_root({3, 1}, r), glmn::UsageError);
  EXPECT_THROW(glmn::box_to_root({1, 4}, r), glmn::UsageError);
}

TEST(BoxRoot, Bijection) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const Rank r(m, n);
      std::set<OddRoot> seen;
      for (const auto& b : glmn::all_boxes(r)) {
        const auto a = glmn::box_to_root(b, r);
        seen.insert(a);
        EXPECT_EQ(glmn::root_to_box(a, r), b);
      }
      EXPECT_EQ(seen.size(), static_cast<std::size_t>(m * n));
    }
}

TEST(OddPositiveRoots, Endpoints) {
  const Rank r(3, 2);
  for (const auto& a : glmn::odd_positive_roots(Partition(r)))
    EXPECT_TRUE(a.eps_first);
  for (const auto& a : glmn::odd_positive_roots(Partition::full(r)))
    EXPECT_FALSE(a.eps_first);
  EXPECT_EQ(glmn::odd_positive_roots(Partition(r)).size(), 6u);
  const auto one = glmn::odd_positive_roots(Partition(Rank(1, 1), {1}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.front(), (SignedOddRoot{{1, 1}, false}));
}

TEST(RhoB, SmallValues) {
  const Rank r(1, 1);
  EXPECT_EQ(glmn::rho_b(Partition(r)), Weight(r, Q({-1, 1})));
  EXPECT_EQ(glmn::rho_b(Partition(r, {1})), Weight(r, Q({0, 0})));
  EXPECT_EQ(glmn::rho_b(Partition(r, {1})) - glmn::rho_b(Partition(r)), glmn::to_weight(OddRoot{1, 1}, r));
  EXPECT_EQ(glmn::rho_b(Partition(Rank(3, 2))), glmn::rho(Rank(3, 2)));
}

TEST(RhoB, MatchesOracle) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; m + n <= 7; ++n)
      for (const auto& p : glmn::all_partitions(Rank(m, n))) {
        const auto rho = glmn::rho_b(p);
        const auto twice = oracle::doubled_rho_b(m, n, p.rows());
        for (std::size_t k = 0; k < twice.size(); ++k)
          ASSERT_EQ(rho[k], Rational(twice[k], 2)) << glmn::to_string(p);
      }
}

TEST(RhoB, ReflectionLawAndSimpleOrthogonality) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; m + n <= 7; ++n)
      for (const auto& p : glmn::all_partitions(Rank(m, n))) {
        const auto rho = glmn::rho_b(p);
        EXPECT_TRUE(glmn::is_integral(rho));
        for (const auto& [box, alpha] : glmn::simple_odd_roots(p)) {
          const auto a = glmn::to_weight(alpha, p.rank());
          EXPECT_TRUE(glmn::is_zero(glmn::bilinear_form(rho, a)));
          const auto refl = glmn::odd_reflection(p, box);
          EXPECT_EQ(refl.root, alpha);
          EXPECT_EQ(glmn::rho_b(refl.target), rho + a);
        }
      }
}

// A simple root of P is one whose negation, together with the other positive
// roots, is again a positive system of some partition.
TEST(RhoB, SimpleRootsAreTheAddableAndRemovableBoxes) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : glmn::all_partitions(Rank(m, n))) {
        const auto simple = glmn::simple_odd_roots(p);
        EXPECT_EQ(simple.size(), p.addable_boxes().size() + p.removable_boxes().size());
        for (const auto& [box, alpha] : simple) {
          EXPECT_EQ(glmn::root_to_box(alpha.root, p.rank()), box);
          EXPECT_EQ(alpha.eps_first, !p.contains(box));
          auto flipped = glmn::odd_positive_roots(p);
          for (auto& g : flipped)
            if (g.root == alpha.root) g.eps_first = !g.eps_first;
          EXPECT_EQ(glmn::odd_positive_roots(p.toggled(box)), flipped);
        }
      }
}

TEST(OddReflection, Examples) {
  const Rank r(3, 2);
  const auto there = glmn::odd_reflection(Partition(r), {1, 1});
  EXPECT_EQ(there.target, Partition(r, {1}));
  EXPECT_EQ(there.root, (SignedOddRoot{{3, 1}, true}));
  const auto back = glmn::odd_reflection(there.target, {1, 1});
  EXPECT_EQ(back.target, Partition(r));
  EXPECT_EQ(back.root, (SignedOddRoot{{3, 1}, false}));
  EXPECT_THROW(glmn::odd_reflection(Partition(r), {2, 1}), glmn::UsageError);
}

TEST(OddReflection, TwiceIsIdentity) {
  gen::Source src(21);
  for (int k = 0; k < gen::kCases; ++k) {
    const auto p = src.partition(src.rank(8));
    for (const auto& b : p.addable_boxes())
      EXPECT_EQ(glmn::odd_reflection(glmn::odd_reflection(p, b).target, b).target, p);
    for (const auto& b : p.removable_boxes())
      EXPECT_EQ(glmn::odd_reflection(glmn::odd_reflection(p, b).target, b).target, p);
  }
}

TEST(Walks, MonotoneWalkReachesTarget) {
  gen::Source src(22);
  for (int k = 0; k < gen::kCases; ++k) {
    const auto p = src.partition(src.rank(8));
    const auto walk = glmn::monotone_walk(p);
    EXPECT_EQ(static_cast<int>(walk.size()), p.size());
    const auto visited = glmn::walk_partitions(Partition(p.rank()), walk);
    EXPECT_EQ(visited.back(), p);
    EXPECT_EQ(visited.size(), walk.size() + 1);
  }
  EXPECT_THROW(glmn::walk_partitions(Partition(Rank(2, 2)), {{1, 1}, {1, 1}, {2, 2}}), glmn::UsageError);
}

TEST(Transport, VermaIsIdentity) {
  gen::Source src(23);
  const Rank r(1, 1);
  const auto e1 = Weight::epsilon(r, 1);
  EXPECT_EQ(glmn::transport_verma(e1, Partition(r), {{1, 1}}), e1);
  for (int k = 0; k < gen::kCases; ++k) {
    const Rank rk = src.rank(7);
    const auto nu = src.weight(rk);
    const auto p = src.partition(rk);
    auto walk = glmn::monotone_walk(p);
    EXPECT_EQ(glmn::transport_verma(nu, Partition(rk), walk), nu);
    // out and back again is a closed walk
    walk.insert(walk.end(), walk.rbegin(), walk.rend());
    EXPECT_EQ(glmn::transport_verma(nu, Partition(rk), walk), nu);
  }
  EXPECT_THROW(glmn::transport_verma(e1, Partition(r), {{1, 1}, {1, 1}, {1, 1}, {2, 1}}), glmn::UsageError);
}

TEST(Transport, SimpleOneByOne) {
  const Rank r(1, 1);
  for (int a = -3; a <= 3; ++a) {
    const auto atyp = glmn::from_pairings(r, Q({a, a}));
    EXPECT_EQ(glmn::pairings(glmn::transport_simple(atyp, Partition(r), {{1, 1}})), Q({a + 1, a + 1}));
    const auto typ = glmn::from_pairings(r, Q({a, a + 2}));
    EXPECT_EQ(glmn::transport_simple(typ, Partition(r), {{1, 1}}), typ);
  }
  EXPECT_THROW(glmn::transport_simple(Weight(r), Partition(r), {{1, 1}, {1, 2}}), glmn::UsageError);
}

// Each step either keeps nu or bumps entries p and m+q of the tuple by one.
TEST(Transport, SimpleStepIsOperationO) {
  gen::Source src(24);
  for (int k = 0; k < gen::kCases; ++k) {
    const Rank r = src.rank(7);
    const auto t = src.entries(r, 2);
    const auto nu = glmn::from_pairings(r, std::vector<Rational>(t.begin(), t.end()));
    auto p = Partition(r);
    auto cur = nu;
    for (const auto& b : glmn::monotone_walk(src.partition(r))) {
      const auto alpha = glmn::odd_reflection(p, b).root;
      const auto next = glmn::transport_simple(cur, p, {b});
      auto t0 = glmn::pairings(cur), t1 = glmn::pairings(next);
      const auto pi = static_cast<std::size_t>(alpha.root.p - 1), qi = static_cast<std::size_t>(r.m + alpha.root.q - 1);
      if (t0[pi] == t0[qi]) {
        t0[pi] += 1;
        t0[qi] += 1;
      }
      EXPECT_EQ(t1, t0);
      p = p.toggled(b);
      cur = next;
    }
  }
}
