#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smashlab/ordered_group.hpp"

namespace smashlab {

struct PrimeSlot {
  enum class Shape { Single, OmegaDescending, OmegaAscending };

  Shape shape = Shape::Single;
  bool idempotent = false;
  std::string name;  // assigned by the spectrum: p<k> or f<k>

  bool operator==(const PrimeSlot&) const = default;
};

// A prime: a Single slot (member 0) or member n >= 1 of a family slot.
struct PrimeRef {
  std::size_t slot = 0;
  std::uint32_t member = 0;

  bool operator==(const PrimeRef&) const = default;
};

struct AdmissibleInterval {
  PrimeRef lower;
  PrimeRef upper;

  bool operator==(const AdmissibleInterval&) const = default;
};

// Chain of primes listed bottom (zero prime) to top (maximal ideal).
class ValuationSpectrum {
 public:
  static ValuationSpectrum from_group(GroupHandle g);
  static ValuationSpectrum from_flags(const std::vector<bool>& flags);
  static ValuationSpectrum from_slots(std::vector<PrimeSlot> slots);

  const std::vector<PrimeSlot>& slots() const { return slots_; }
  const GroupHandle& group() const { return group_; }
  bool is_finite() const;
  // Number of primes; throws InfiniteSpectrum when a family is present.
  std::size_t size() const;
  std::vector<PrimeRef> primes() const;

  PrimeRef bottom() const { return {0, 0}; }
  PrimeRef top() const { return {slots_.size() - 1, 0}; }

  void require(PrimeRef p) const;
  std::string name(PrimeRef p) const;
  PrimeRef find(std::string_view name) const;
  bool idempotent(PrimeRef p) const;
  std::strong_ordering compare(PrimeRef a, PrimeRef b) const;

  // Convex subgroup whose complement is the prime; needs a group-built spectrum.
  SubgroupId subgroup_of(PrimeRef p) const;

  // Flag literal accepted by `spec X = chain [...]`, e.g. [i,-,desc(i),i].
  std::string flags_literal() const;
  std::string to_string() const;

  // Shape and flags only; the originating group is not compared.
  bool operator==(const ValuationSpectrum& other) const { return slots_ == other.slots_; }

 private:
  std::vector<PrimeSlot> slots_;
  GroupHandle group_;
};

std::vector<AdmissibleInterval> admissible_intervals(const ValuationSpectrum& spec);

// Slot indices of the idempotent primes (families count as one slot).
std::vector<std::size_t> ispec(const ValuationSpectrum& spec);

// Realizes a finite flag pattern (flags[0] must be true) by a lex product of
// Q (idempotent) and Z (not) factors.
GroupDescriptor realize_flags(const std::vector<bool>& flags);

}  // namespace smashlab
