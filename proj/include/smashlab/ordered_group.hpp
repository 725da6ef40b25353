#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace smashlab {

// Constructor algebra for the value groups we can compute with.
struct GroupDescriptor {
  enum class Kind { Int, Rat, IntLoc, Lex, AntilexOmega };

  Kind kind = Kind::Int;
  long base = 0;                       // IntLoc only
  std::vector<GroupDescriptor> parts;  // Lex parts, or the single AntilexOmega base

  static GroupDescriptor integers();
  static GroupDescriptor rationals();
  static GroupDescriptor localized(long base);
  static GroupDescriptor lex(std::vector<GroupDescriptor> parts);
  static GroupDescriptor antilex_omega(GroupDescriptor base);

  bool archimedean() const;
  std::string to_string() const;

  bool operator==(const GroupDescriptor&) const = default;
};

// Scalars for archimedean groups, tuples for Lex (first coordinate dominant),
// finite index maps for AntilexOmega (highest index dominant).
class GroupElement {
 public:
  using Tuple = std::vector<GroupElement>;
  // Sorted by index, zero values dropped.
  using Support = std::vector<std::pair<std::uint32_t, mpq_class>>;

  GroupElement() : rep_(mpq_class(0)) {}
  explicit GroupElement(mpq_class value);
  explicit GroupElement(Tuple coords) : rep_(std::move(coords)) {}
  explicit GroupElement(Support support);
  static GroupElement integer(long n) { return GroupElement(mpq_class(n)); }

  bool is_scalar() const { return rep_.index() == 0; }
  bool is_tuple() const { return rep_.index() == 1; }
  bool is_support() const { return rep_.index() == 2; }

  const mpq_class& scalar() const;
  const Tuple& coords() const;
  const Support& support() const;

  bool is_zero() const;
  int sign() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;

  // Throws TypeMismatch when the two elements have different shapes.
  std::strong_ordering operator<=>(const GroupElement& other) const;
  bool operator==(const GroupElement& other) const;

  std::string to_string() const;

 private:
  std::variant<mpq_class, Tuple, Support> rep_;
};

// Structural description of a convex subgroup.  Part(i, C) is {0}^i x C x G_{i+1} x ...
struct Convex {
  enum class Kind { Trivial, Whole, Member, Part };

  Kind kind = Kind::Trivial;
  std::uint32_t member = 0;  // Member: F_n
  std::size_t part = 0;      // Part: coordinate index
  std::vector<Convex> inner;  // Part: exactly one entry

  bool operator==(const Convex&) const = default;
};

struct ChainSlot {
  enum class Shape { Single, OmegaAscending };
  Shape shape = Shape::Single;
  Convex subgroup;  // for families the Member leaf carries member = 0
};

// Position in the convex chain; member >= 1 addresses F_member of a family slot.
struct SubgroupId {
  std::size_t slot = 0;
  std::uint32_t member = 0;

  auto operator<=>(const SubgroupId&) const = default;
};

class Group {
 public:
  explicit Group(GroupDescriptor desc);

  const GroupDescriptor& descriptor() const { return desc_; }
  const std::vector<ChainSlot>& convex_chain() const { return chain_; }
  bool has_families() const;

  GroupElement zero() const;
  bool is_element(const GroupElement& x) const;
  void require_element(const GroupElement& x) const;

  std::strong_ordering cmp(const GroupElement& a, const GroupElement& b) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;

  SubgroupId trivial() const { return {0, 0}; }
  SubgroupId whole() const { return {chain_.size() - 1, 0}; }
  void require_subgroup(SubgroupId h) const;
  Convex subgroup(SubgroupId h) const;
  std::string subgroup_name(SubgroupId h) const;

  bool in_subgroup(const GroupElement& x, SubgroupId h) const;
  bool has_least_positive_mod(SubgroupId h) const;
  // Some element whose class is the least positive element of G/H.
  std::optional<GroupElement> least_positive_mod(SubgroupId h) const;
  // Canonical representative of x + H.
  GroupElement reduce_mod(const GroupElement& x, SubgroupId h) const;

  // Largest omega index mentioned by x (0 if none).
  std::uint32_t max_index(const GroupElement& x) const;

  GroupElement random_element(std::mt19937_64& rng, int scale = 3) const;

 private:
  GroupDescriptor desc_;
  std::vector<ChainSlot> chain_;
};

using GroupHandle = std::shared_ptr<const Group>;

GroupHandle build_group(GroupDescriptor desc);

}  // namespace smashlab
