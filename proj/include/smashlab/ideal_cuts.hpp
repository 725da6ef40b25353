#pragma once

#include <string>
#include <vector>

#include "smashlab/ordered_group.hpp"

namespace smashlab {

// An upward-closed set of values.  Integral ideals are the cuts inside
// closed(0); loccone cuts model localizations R_q sitting inside the
// fraction field.  Values are always kept in normal form, so structural
// equality is set equality.
class Cut {
 public:
  enum class Kind { Zero, Closed, OpenAbove, LocCone, All };

  static Cut zero(GroupHandle g);
  static Cut all(GroupHandle g);
  static Cut closed(GroupHandle g, GroupElement at);
  // {x : x - at > H}
  static Cut open_above(GroupHandle g, GroupElement at, SubgroupId h);
  // {x : x - at >= -h for some h in H}
  static Cut loc_cone(GroupHandle g, GroupElement at, SubgroupId h);

  Kind kind() const { return kind_; }
  const GroupElement& threshold() const { return at_; }
  SubgroupId subgroup() const { return h_; }
  const GroupHandle& group() const { return group_; }
  bool strict() const { return kind_ == Kind::OpenAbove; }

  bool operator==(const Cut& other) const;

  // Literal form: closed(e), open(e,H1), loccone(e,H2_3), zero, all.
  std::string to_string() const;

 private:
  Cut(GroupHandle g, Kind kind, GroupElement at, SubgroupId h);
  void normalize();

  GroupHandle group_;
  Kind kind_;
  GroupElement at_;
  SubgroupId h_;
};

void require_same_group(const Cut& a, const Cut& b);

bool cut_contains(const Cut& c, const GroupElement& x);
Cut minkowski(const Cut& a, const Cut& b);
// Set inclusion a ⊆ b (for ideals: a is the smaller ideal).
bool cut_leq(const Cut& a, const Cut& b);
Cut ideal_sum(const Cut& a, const Cut& b);
Cut ideal_intersection(const Cut& a, const Cut& b);

bool is_integral(const Cut& c);
bool is_idempotent(const Cut& c);
// The same decision read off the normal form, without forming c + c.
bool idempotent_by_shape(const Cut& c);

// The prime ideal attached to a convex subgroup H: values strictly above H.
Cut prime_cut(const GroupHandle& g, SubgroupId h);

struct PrimeSupport {
  std::vector<SubgroupId> members;          // finitely many listed primes
  std::vector<std::size_t> whole_families;  // family slots where every member qualifies
};

// Convex subgroups K with c ⊆ prime_cut(K), i.e. V(c) on the chain.
PrimeSupport support_primes(const Cut& c);

}  // namespace smashlab
