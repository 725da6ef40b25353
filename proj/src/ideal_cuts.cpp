#include "smashlab/ideal_cuts.hpp"

#include <algorithm>

#include "smashlab/error.hpp"

namespace smashlab {

Cut::Cut(GroupHandle g, Kind kind, GroupElement at, SubgroupId h)
    : group_(std::move(g)), kind_(kind), at_(std::move(at)), h_(h) {
  normalize();
}

Cut Cut::zero(GroupHandle g) {
  auto z = g->zero();
  return Cut(std::move(g), Kind::Zero, std::move(z), SubgroupId{});
}

Cut Cut::all(GroupHandle g) {
  auto z = g->zero();
  return Cut(std::move(g), Kind::All, std::move(z), SubgroupId{});
}

Cut Cut::closed(GroupHandle g, GroupElement at) {
  g->require_element(at);
  return Cut(std::move(g), Kind::Closed, std::move(at), SubgroupId{});
}

Cut Cut::open_above(GroupHandle g, GroupElement at, SubgroupId h) {
  g->require_element(at);
  g->require_subgroup(h);
  return Cut(std::move(g), Kind::OpenAbove, std::move(at), h);
}

Cut Cut::loc_cone(GroupHandle g, GroupElement at, SubgroupId h) {
  g->require_element(at);
  g->require_subgroup(h);
  return Cut(std::move(g), Kind::LocCone, std::move(at), h);
}

void Cut::normalize() {
  const Group& g = *group_;
  if (kind_ == Kind::Zero || kind_ == Kind::All) {
    at_ = g.zero();
    h_ = SubgroupId{};
    return;
  }
  if (kind_ == Kind::Closed) h_ = g.trivial();
  if (h_ == g.whole()) {
    kind_ = kind_ == Kind::OpenAbove ? Kind::Zero : Kind::All;
    at_ = g.zero();
    h_ = SubgroupId{};
    return;
  }
  if (kind_ == Kind::OpenAbove) {
    if (auto eps = g.least_positive_mod(h_)) {
      kind_ = Kind::LocCone;
      at_ = at_ + *eps;
    }
  }
  if (kind_ == Kind::LocCone && h_ == g.trivial()) kind_ = Kind::Closed;
  at_ = g.reduce_mod(at_, h_);
}

bool Cut::operator==(const Cut& other) const {
  if (!(group_->descriptor() == other.group_->descriptor())) return false;
  return kind_ == other.kind_ && h_ == other.h_ && at_ == other.at_;
}

std::string Cut::to_string() const {
  switch (kind_) {
    case Kind::Zero:
      return "zero";
    case Kind::All:
      return "all";
    case Kind::Closed:
      return "closed(" + at_.to_string() + ")";
    case Kind::OpenAbove:
      return "open(" + at_.to_string() + "," + group_->subgroup_name(h_) + ")";
    case Kind::LocCone:
      return "loccone(" + at_.to_string() + "," + group_->subgroup_name(h_) + ")";
  }
  return "?";
}

void require_same_group(const Cut& a, const Cut& b) {
  if (a.group() != b.group() && !(a.group()->descriptor() == b.group()->descriptor()))
    fail(ErrorKind::GroupMismatch, "cuts over " + a.group()->descriptor().to_string() + " and " +
                                       b.group()->descriptor().to_string());
}

bool cut_contains(const Cut& c, const GroupElement& x) {
  const Group& g = *c.group();
  g.require_element(x);
  switch (c.kind()) {
    case Cut::Kind::Zero:
      return false;
    case Cut::Kind::All:
      return true;
    case Cut::Kind::Closed:
      return x >= c.threshold();
    case Cut::Kind::OpenAbove: {
      const GroupElement d = x - c.threshold();
      return d.sign() > 0 && !g.in_subgroup(d, c.subgroup());
    }
    case Cut::Kind::LocCone: {
      const GroupElement d = x - c.threshold();
      return d.sign() >= 0 || g.in_subgroup(d, c.subgroup());
    }
  }
  return false;
}

Cut minkowski(const Cut& a, const Cut& b) {
  require_same_group(a, b);
  using K = Cut::Kind;
  if (a.kind() == K::Zero || b.kind() == K::Zero) return Cut::zero(a.group());
  if (a.kind() == K::All || b.kind() == K::All) return Cut::all(a.group());
  const SubgroupId h = std::max(a.subgroup(), b.subgroup());
  const bool strict = (a.subgroup() == h && a.strict()) || (b.subgroup() == h && b.strict());
  GroupElement at = a.threshold() + b.threshold();
  if (strict) return Cut::open_above(a.group(), std::move(at), h);
  return Cut::loc_cone(a.group(), std::move(at), h);
}

bool cut_leq(const Cut& a, const Cut& b) {
  require_same_group(a, b);
  using K = Cut::Kind;
  if (a.kind() == K::Zero || b.kind() == K::All) return true;
  if (b.kind() == K::Zero || a.kind() == K::All) return false;
  const Group& g = *a.group();
  const GroupElement d = a.threshold() - b.threshold();
  const SubgroupId h = std::max(a.subgroup(), b.subgroup());
  if (!g.in_subgroup(d, h)) return d.sign() > 0;
  if (a.subgroup() == b.subgroup()) return a.strict() || !b.strict();
  if (a.subgroup() < b.subgroup()) return !b.strict();
  return a.strict();
}

Cut ideal_sum(const Cut& a, const Cut& b) { return cut_leq(a, b) ? b : a; }

Cut ideal_intersection(const Cut& a, const Cut& b) { return cut_leq(a, b) ? a : b; }

bool is_integral(const Cut& c) {
  return cut_leq(c, Cut::closed(c.group(), c.group()->zero()));
}

bool is_idempotent(const Cut& c) {
  if (!is_integral(c)) fail(ErrorKind::NotAnIdeal, c.to_string() + " contains negative values");
  return minkowski(c, c) == c;
}

bool idempotent_by_shape(const Cut& c) {
  if (!is_integral(c)) fail(ErrorKind::NotAnIdeal, c.to_string() + " contains negative values");
  const Group& g = *c.group();
  switch (c.kind()) {
    case Cut::Kind::Zero:
      return true;
    case Cut::Kind::Closed:
      return c.threshold().is_zero();
    case Cut::Kind::OpenAbove:
      return g.in_subgroup(c.threshold(), c.subgroup()) &&
             !g.has_least_positive_mod(c.subgroup());
    case Cut::Kind::LocCone:
      return g.in_subgroup(c.threshold(), c.subgroup());
    case Cut::Kind::All:
      return true;
  }
  return false;
}

Cut prime_cut(const GroupHandle& g, SubgroupId h) { return Cut::open_above(g, g->zero(), h); }

PrimeSupport support_primes(const Cut& c) {
  const Group& g = *c.group();
  PrimeSupport out;
  const auto& chain = g.convex_chain();
  for (std::size_t s = 0; s < chain.size(); ++s) {
    if (chain[s].shape == ChainSlot::Shape::Single) {
      if (cut_leq(c, prime_cut(c.group(), {s, 0}))) out.members.push_back({s, 0});
      continue;
    }
    // Family primes shrink as the member index grows, so the qualifying
    // members form an initial segment that stabilizes past every index c mentions.
    const std::uint32_t bound = g.max_index(c.threshold()) + c.subgroup().member + 2;
    std::vector<SubgroupId> hits;
    for (std::uint32_t n = 1; n <= bound; ++n)
      if (cut_leq(c, prime_cut(c.group(), {s, n}))) hits.push_back({s, n});
    if (!hits.empty() && hits.back().member == bound)
      out.whole_families.push_back(s);
    else
      out.members.insert(out.members.end(), hits.begin(), hits.end());
  }
  return out;
}

}  // namespace smashlab
