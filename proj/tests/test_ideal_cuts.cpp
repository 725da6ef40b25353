#include <gtest/gtest.h>

#include <random>

#include "smashlab/error.hpp"
#include "smashlab/ideal_cuts.hpp"
#include "support.hpp"

using namespace smashlab;
using namespace smashlab::testing;

namespace {

using D = GroupDescriptor;

GroupElement q(long n, long d = 1) { return GroupElement(mpq_class(n, d)); }
GroupElement tup(std::vector<GroupElement> xs) { return GroupElement(GroupElement::Tuple(std::move(xs))); }
GroupElement idx(GroupElement::Support s) { return GroupElement(std::move(s)); }

std::vector<GroupDescriptor> groups() {
  return {D::integers(),
          D::rationals(),
          D::localized(2),
          D::lex({D::integers(), D::integers()}),
          D::lex({D::rationals(), D::integers()}),
          D::antilex_omega(D::rationals()),
          D::lex({D::integers(), D::antilex_omega(D::rationals())})};
}

// Elements near the thresholds of the given cuts plus random ones.
std::vector<GroupElement> probe(const Group& g, std::mt19937_64& rng, const std::vector<Cut>& cuts) {
  std::vector<GroupElement> out;
  for (int i = 0; i < 60; ++i) out.push_back(g.random_element(rng, 3));
  for (const auto& c : cuts) {
    if (c.kind() == Cut::Kind::Zero || c.kind() == Cut::Kind::All) continue;
    out.push_back(c.threshold());
    for (int i = 0; i < 20; ++i) out.push_back(g.add(c.threshold(), g.random_element(rng, 1)));
  }
  return out;
}

}  // namespace

TEST(IdealCuts, MembershipExamples) {
  auto z = build_group(D::integers());
  EXPECT_TRUE(cut_contains(Cut::closed(z, q(2)), q(2)));
  auto r = build_group(D::rationals());
  EXPECT_FALSE(cut_contains(Cut::open_above(r, q(0), {0, 0}), q(0)));
  EXPECT_TRUE(cut_contains(Cut::open_above(r, q(0), {0, 0}), q(1, 1000)));
  auto nc = build_group(D::lex({D::integers(), D::antilex_omega(D::rationals())}));
  const Cut cone = Cut::loc_cone(nc, nc->zero(), {1, 1});
  EXPECT_TRUE(cut_contains(cone, tup({q(0), idx({{1, -5}})})));
  EXPECT_FALSE(cut_contains(cone, tup({q(0), idx({{2, -5}})})));
  EXPECT_TRUE(cut_contains(cone, tup({q(0), idx({{2, 5}, {1, -9}})})));
  EXPECT_THROW(cut_contains(Cut::closed(z, q(0)), q(1, 2)), Error);
}

TEST(IdealCuts, NormalForm) {
  auto z = build_group(D::integers());
  EXPECT_EQ(Cut::open_above(z, q(0), {0, 0}), Cut::closed(z, q(1)));
  EXPECT_EQ(Cut::open_above(z, q(0), z->whole()), Cut::zero(z));
  EXPECT_EQ(Cut::loc_cone(z, q(4), z->whole()), Cut::all(z));
  EXPECT_EQ(Cut::loc_cone(z, q(4), {0, 0}), Cut::closed(z, q(4)));
  auto lex = build_group(D::lex({D::integers(), D::integers()}));
  EXPECT_EQ(Cut::open_above(lex, tup({q(1), q(5)}), {1, 0}),
            Cut::open_above(lex, tup({q(1), q(-7)}), {1, 0}));
  // Strictly above {0} x Z over lex(Z,Z): first coordinate at least 1.
  EXPECT_TRUE(cut_contains(Cut::open_above(lex, lex->zero(), {1, 0}), tup({q(1), q(-50)})));
  EXPECT_FALSE(cut_contains(Cut::open_above(lex, lex->zero(), {1, 0}), tup({q(0), q(50)})));
}

TEST(IdealCuts, MinkowskiExamples) {
  auto z = build_group(D::integers());
  EXPECT_EQ(minkowski(Cut::closed(z, q(2)), Cut::closed(z, q(3))), Cut::closed(z, q(5)));
  const Cut m = prime_cut(z, {0, 0});
  EXPECT_EQ(minkowski(m, m), Cut::closed(z, q(2)));
  auto pu = build_group(D::localized(2));
  const Cut mp = prime_cut(pu, {0, 0});
  EXPECT_EQ(minkowski(mp, mp), mp);
  EXPECT_EQ(minkowski(Cut::zero(z), Cut::closed(z, q(-3))), Cut::zero(z));
  EXPECT_EQ(minkowski(Cut::all(z), Cut::closed(z, q(7))), Cut::all(z));
  auto r = build_group(D::rationals());
  EXPECT_THROW(minkowski(Cut::closed(z, q(0)), Cut::closed(r, q(0))), Error);
  try {
    cut_leq(Cut::closed(z, q(0)), Cut::closed(r, q(0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
}

TEST(IdealCuts, OrderExamples) {
  auto z = build_group(D::integers());
  EXPECT_TRUE(cut_leq(Cut::closed(z, q(3)), Cut::closed(z, q(2))));
  EXPECT_FALSE(cut_leq(Cut::closed(z, q(2)), Cut::closed(z, q(3))));
  EXPECT_EQ(ideal_sum(Cut::closed(z, q(2)), Cut::closed(z, q(3))), Cut::closed(z, q(2)));
  auto r = build_group(D::rationals());
  EXPECT_EQ(ideal_intersection(Cut::closed(r, q(2)), Cut::open_above(r, q(2), {0, 0})),
            Cut::open_above(r, q(2), {0, 0}));
}

TEST(IdealCuts, IdempotencyExamples) {
  auto z = build_group(D::integers());
  EXPECT_FALSE(is_idempotent(Cut::closed(z, q(1))));
  EXPECT_TRUE(is_idempotent(Cut::closed(z, q(0))));
  EXPECT_TRUE(is_idempotent(Cut::zero(z)));
  EXPECT_TRUE(is_idempotent(prime_cut(build_group(D::localized(2)), {0, 0})));
  auto nc = build_group(D::lex({D::integers(), D::antilex_omega(D::rationals())}));
  EXPECT_FALSE(is_idempotent(prime_cut(nc, {2, 0})));
  EXPECT_TRUE(is_idempotent(prime_cut(nc, {1, 3})));
  try {
    is_idempotent(Cut::closed(z, q(-1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAnIdeal);
  }
  EXPECT_THROW(is_idempotent(Cut::all(z)), Error);
}

TEST(IdealCuts, PrimesAndSupport) {
  auto z = build_group(D::integers());
  EXPECT_EQ(prime_cut(z, z->whole()), Cut::zero(z));
  const auto s = support_primes(Cut::closed(z, q(1)));
  ASSERT_EQ(s.members.size(), 1u);
  EXPECT_EQ(s.members[0], (SubgroupId{0, 0}));
  EXPECT_TRUE(s.whole_families.empty());
  auto pu = build_group(D::localized(2));
  const auto sp = support_primes(prime_cut(pu, {0, 0}));
  ASSERT_EQ(sp.members.size(), 1u);
  EXPECT_EQ(sp.members[0], (SubgroupId{0, 0}));
  // The zero ideal lies in every prime, the unit ideal in none.
  EXPECT_EQ(support_primes(Cut::zero(z)).members.size(), 2u);
  EXPECT_TRUE(support_primes(Cut::closed(z, q(0))).members.empty());
  EXPECT_THROW(prime_cut(z, {4, 0}), Error);
}

class CutProperties : public ::testing::TestWithParam<GroupDescriptor> {};

TEST_P(CutProperties, MinkowskiIsACommutativeMonoid) {
  auto g = build_group(GetParam());
  std::mt19937_64 rng(23);
  const Cut unit = Cut::closed(g, g->zero());
  for (int i = 0; i < 200; ++i) {
    const Cut a = random_cut(g, rng, false), b = random_cut(g, rng, false),
              c = random_cut(g, rng, false);
    EXPECT_EQ(minkowski(a, b), minkowski(b, a));
    EXPECT_EQ(minkowski(minkowski(a, b), c), minkowski(a, minkowski(b, c)))
        << a.to_string() << " " << b.to_string() << " " << c.to_string();
    EXPECT_EQ(minkowski(a, unit), a);
  }
}

TEST_P(CutProperties, MinkowskiAgreesWithSampledSums) {
  auto g = build_group(GetParam());
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const Cut a = random_cut(g, rng, false), b = random_cut(g, rng, false);
    const Cut sum = minkowski(a, b);
    const auto pool = probe(*g, rng, {a, b});
    std::vector<GroupElement> in_a, in_b;
    for (const auto& x : pool) {
      if (cut_contains(a, x)) in_a.push_back(x);
      if (cut_contains(b, x)) in_b.push_back(x);
    }
    for (std::size_t k = 0; k < in_a.size() && k < in_b.size(); ++k)
      EXPECT_TRUE(cut_contains(sum, g->add(in_a[k], in_b[in_b.size() - 1 - k])))
          << a.to_string() << " + " << b.to_string() << " = " << sum.to_string();
    const bool a_min = a.kind() == Cut::Kind::Closed || a.kind() == Cut::Kind::LocCone;
    const bool b_min = b.kind() == Cut::Kind::Closed || b.kind() == Cut::Kind::LocCone;
    if (a_min && b_min) EXPECT_TRUE(cut_contains(sum, g->add(a.threshold(), b.threshold())));
    // Nothing below both thresholds' sum modulo the widest subgroup.
    if (a.kind() == Cut::Kind::Closed && b.kind() == Cut::Kind::Closed)
      for (const auto& x : pool)
        EXPECT_EQ(cut_contains(sum, x), g->cmp(x, g->add(a.threshold(), b.threshold())) >= 0);
  }
}

TEST_P(CutProperties, OrderAgreesWithMembership) {
  auto g = build_group(GetParam());
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Cut a = random_cut(g, rng, false), b = random_cut(g, rng, false);
    const bool ab = cut_leq(a, b), ba = cut_leq(b, a);
    EXPECT_TRUE(ab || ba);
    EXPECT_EQ(ab && ba, a == b);
    const auto pool = probe(*g, rng, {a, b});
    for (const auto& x : pool) {
      if (ab && cut_contains(a, x)) EXPECT_TRUE(cut_contains(b, x)) << a.to_string() << " <= " << b.to_string();
      if (a == b) EXPECT_EQ(cut_contains(a, x), cut_contains(b, x));
      EXPECT_EQ(cut_contains(ideal_sum(a, b), x), cut_contains(a, x) || cut_contains(b, x));
      EXPECT_EQ(cut_contains(ideal_intersection(a, b), x), cut_contains(a, x) && cut_contains(b, x));
    }
  }
}

TEST_P(CutProperties, MinkowskiIsMonotone) {
  auto g = build_group(GetParam());
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const Cut a = random_cut(g, rng, false), b = random_cut(g, rng, false),
              c = random_cut(g, rng, false);
    if (cut_leq(a, b)) EXPECT_TRUE(cut_leq(minkowski(a, c), minkowski(b, c)));
  }
}

TEST_P(CutProperties, IdempotencyTwoRoutes) {
  auto g = build_group(GetParam());
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const Cut c = random_cut(g, rng, true);
    ASSERT_TRUE(is_integral(c));
    EXPECT_EQ(is_idempotent(c), idempotent_by_shape(c)) << c.to_string();
  }
  for (std::size_t s = 0; s < g->convex_chain().size(); ++s) {
    const bool family = g->convex_chain()[s].shape == ChainSlot::Shape::OmegaAscending;
    for (std::uint32_t n = family ? 1 : 0; n <= (family ? 3u : 0u); ++n) {
      const SubgroupId h{s, n};
      EXPECT_EQ(is_idempotent(prime_cut(g, h)), !g->has_least_positive_mod(h))
          << g->subgroup_name(h);
    }
  }
}

TEST_P(CutProperties, SupportMatchesPrimeContainment) {
  auto g = build_group(GetParam());
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const Cut c = random_cut(g, rng, true);
    const auto sup = support_primes(c);
    for (std::size_t s = 0; s < g->convex_chain().size(); ++s) {
      const bool family = g->convex_chain()[s].shape == ChainSlot::Shape::OmegaAscending;
      for (std::uint32_t n = family ? 1 : 0; n <= (family ? 6u : 0u); ++n) {
        const SubgroupId h{s, n};
        const bool listed =
            std::find(sup.members.begin(), sup.members.end(), h) != sup.members.end() ||
            std::find(sup.whole_families.begin(), sup.whole_families.end(), s) !=
                sup.whole_families.end();
        EXPECT_EQ(listed, cut_leq(c, prime_cut(g, h))) << c.to_string() << " at " << g->subgroup_name(h);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Constructors, CutProperties, ::testing::ValuesIn(groups()),
                         [](const auto& info) { return "g" + std::to_string(info.index); });
