#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "smashlab/gps_ring.hpp"
#include "smashlab/ideal_cuts.hpp"

namespace smashlab::testing {

inline GroupElement nonneg_element(const Group& g, std::mt19937_64& rng, int scale) {
  const auto x = g.random_element(rng, scale);
  return x.sign() < 0 ? g.neg(x) : x;
}

inline GroupElement positive_element(const Group& g, std::mt19937_64& rng, int scale) {
  for (;;) {
    const auto x = nonneg_element(g, rng, scale);
    if (!x.is_zero()) return x;
  }
}

inline SubgroupId random_subgroup(const Group& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> slot(0, g.convex_chain().size() - 1);
  const std::size_t s = slot(rng);
  if (g.convex_chain()[s].shape == ChainSlot::Shape::OmegaAscending)
    return {s, std::uniform_int_distribution<std::uint32_t>(1, 4)(rng)};
  return {s, 0};
}

inline Cut random_cut(const GroupHandle& g, std::mt19937_64& rng, bool integral) {
  const int kind = std::uniform_int_distribution<int>(0, integral ? 3 : 5)(rng);
  const GroupElement at = integral ? nonneg_element(*g, rng, 2) : g->random_element(rng, 2);
  switch (kind) {
    case 0: return Cut::zero(g);
    case 1: return Cut::closed(g, at);
    case 2:
    case 3: return Cut::open_above(g, at, random_subgroup(*g, rng));
    case 4: return Cut::loc_cone(g, at, random_subgroup(*g, rng));
    default: return Cut::all(g);
  }
}

// Zero plus a few small positive values, fixed per group.  Exact elimination
// produces minors, so a small exponent pool keeps their supports small.
inline std::vector<GroupElement> exponent_pool(const Group& g, std::size_t positives = 3) {
  std::mt19937_64 rng(97);
  std::vector<GroupElement> pool{g.zero()};
  for (int tries = 0; pool.size() < positives + 1; ++tries) {
    GroupElement x = positive_element(g, rng, 1 + tries / 16);
    if (std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(std::move(x));
  }
  return pool;
}

inline const GroupElement& pick(const std::vector<GroupElement>& pool, std::mt19937_64& rng,
                                bool positive = false) {
  std::uniform_int_distribution<std::size_t> at(positive ? 1 : 0, pool.size() - 1);
  return pool[at(rng)];
}

inline Series random_series(const std::vector<GroupElement>& pool, std::mt19937_64& rng,
                            std::size_t max_terms, std::uint32_t p = 0) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Series::Term> terms;
  const std::size_t n = count(rng);
  for (std::size_t k = 0; k < n; ++k) {
    int c = 0;
    while (c == 0) c = coef(rng);
    terms.emplace_back(pick(pool, rng), mpq_class(c));
  }
  return Series::from_terms(std::move(terms), p);
}

// At most max_terms numerator terms; zero with the given odds; a unit
// denominator 1 + t^e with odds 0.3.
inline RingElement random_ring_element(const GroupHandle& g, const std::vector<GroupElement>& pool,
                                       std::mt19937_64& rng, std::size_t max_terms = 4,
                                       double zero_odds = 0.1, std::uint32_t p = 0) {
  if (std::bernoulli_distribution(zero_odds)(rng)) return RingElement::zero(g, p);
  Series num = random_series(pool, rng, max_terms, p);
  if (num.is_zero()) return RingElement::zero(g, p);
  Series den = Series::monomial(g->zero(), 1, p);
  if (std::bernoulli_distribution(0.3)(rng)) den = den + Series::monomial(pick(pool, rng, true), 1, p);
  return RingElement(g, std::move(num), std::move(den));
}

inline ValMatrix random_matrix(const GroupHandle& g, const std::vector<GroupElement>& pool,
                               std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               std::size_t max_terms = 4) {
  ValMatrix m(g, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_ring_element(g, pool, rng, max_terms);
  return m;
}

// Product of a few elementary transvections and unit scalings.
inline ValMatrix random_invertible(const GroupHandle& g, const std::vector<GroupElement>& pool,
                                   std::mt19937_64& rng, std::size_t n, int steps = 2) {
  ValMatrix m = ValMatrix::identity(g, n);
  std::uniform_int_distribution<std::size_t> at(0, n - 1);
  for (int s = 0; s < steps; ++s) {
    ValMatrix e = ValMatrix::identity(g, n);
    const std::size_t i = at(rng), j = at(rng);
    if (i != j)
      e.at(i, j) = RingElement(g, random_series(pool, rng, 2));
    else
      e.at(i, i) = RingElement(g, Series::monomial(g->zero(), 1) + Series::monomial(pick(pool, rng, true), 1));
    m = m * e;
  }
  return m;
}

// U*A*V == D  <=>  U*A*(V*C) == D*C for a diagonal unit matrix C.  Taking C_j
// as the product of the distinct denominators of column j of V keeps the
// product free of nested denominators.
inline bool snf_identity_holds(const SnfResult& r, const ValMatrix& a) {
  const GroupHandle& g = a.group();
  const std::uint32_t p = a.characteristic();
  ValMatrix vc = r.V, dc = r.D;
  for (std::size_t j = 0; j < vc.cols(); ++j) {
    std::vector<Series> dens;
    for (std::size_t i = 0; i < vc.rows(); ++i)
      if (std::find(dens.begin(), dens.end(), vc.at(i, j).den()) == dens.end())
        dens.push_back(vc.at(i, j).den());
    Series c = Series::monomial(g->zero(), 1, p);
    for (const auto& d : dens) c = c * d;
    for (std::size_t i = 0; i < vc.rows(); ++i) {
      Series num = vc.at(i, j).num();
      for (const auto& d : dens)
        if (!(d == vc.at(i, j).den())) num = num * d;
      vc.at(i, j) = RingElement(g, num);
    }
    if (j < dc.rows()) dc.at(j, j) = dc.at(j, j) * RingElement(g, c);
  }
  return r.U * a * vc == dc;
}

inline bool is_diagonal(const ValMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && !d.at(i, j).is_zero()) return false;
  return true;
}

// Each diagonal entry divides the next, zeros last.
inline bool divisibility_chain_holds(const ValMatrix& d) {
  const std::size_t r = std::min(d.rows(), d.cols());
  for (std::size_t k = 0; k + 1 < r; ++k)
    if (!divides(d.at(k, k), d.at(k + 1, k + 1))) return false;
  return true;
}

inline std::vector<GroupDescriptor> constructor_groups() {
  using D = GroupDescriptor;
  return {D::integers(), D::rationals(), D::localized(2), D::lex({D::integers(), D::integers()}),
          D::antilex_omega(D::rationals())};
}

}  // namespace smashlab::testing
