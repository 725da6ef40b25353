#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smashlab/spectrum.hpp"

namespace smashlab {

struct ChainItem {
  enum class Kind { Single, Family };

  Kind kind = Kind::Single;
  AdmissibleInterval interval;  // Single
  std::size_t family_slot = 0;  // Family: the items [f_j, f_j] for every j >= 1

  static ChainItem single(PrimeRef lower, PrimeRef upper) {
    return {Kind::Single, {lower, upper}, 0};
  }
  static ChainItem family(std::size_t slot) { return {Kind::Family, {}, slot}; }

  bool operator==(const ChainItem&) const = default;
};

struct IntervalChain {
  std::vector<ChainItem> items;

  bool finite() const;
  bool operator==(const IntervalChain&) const = default;
};

enum class ViolationKind { Order, NotAdmissible, C1, C2, C3 };

struct ChainValidation {
  bool valid = true;
  ViolationKind kind = ViolationKind::Order;
  std::string detail;
};

std::string violation_name(ViolationKind kind);

// Throws UnknownPrime for references outside the spectrum.
ChainValidation validate_chain(const ValuationSpectrum& spec, const IntervalChain& chain);

// Items in chain order (the order of validate_chain); the chain must be valid.
IntervalChain sorted_chain(const ValuationSpectrum& spec, const IntervalChain& chain);

std::vector<IntervalChain> enumerate_smashing(const ValuationSpectrum& spec);

struct HomEpiDescriptor {
  bool finite = true;
  std::vector<AdmissibleInterval> components;  // finite chains, in chain order
  IntervalChain chain;                         // sorted input
  std::optional<PrimeRef> kernel;              // nullopt: kernel is R (zero ring)
  bool is_flat = false;
  bool is_compactly_generated = false;
  bool is_universal_localization = false;
  std::string ring;

  // Finite stage n of the direct system for chains with families: the first
  // n members of each family split off, the rest merge into the capping item.
  std::vector<AdmissibleInterval> stage(const ValuationSpectrum& spec, std::uint32_t n) const;
};

HomEpiDescriptor classify_chain(const ValuationSpectrum& spec, const IntervalChain& chain);

// Name of the ring R_q/j for one interval: Q, R, k, k(p), R_p, R/p, R_q/j.
std::string component_ring(const ValuationSpectrum& spec, const AdmissibleInterval& iv);

bool is_flat(const IntervalChain& chain);
inline bool is_compactly_generated(const IntervalChain& chain) { return is_flat(chain); }

bool tc_holds(const ValuationSpectrum& spec);
bool tc_holds_family(const std::vector<ValuationSpectrum>& specs);

// Up-set of a finite chain, given by its least prime (nullopt: empty set).
struct ThomasonSet {
  std::optional<std::size_t> least;

  bool operator==(const ThomasonSet&) const = default;
};

std::vector<ThomasonSet> thomason_sets(const ValuationSpectrum& spec);
ThomasonSet chain_to_thomason(const ValuationSpectrum& spec, const IntervalChain& chain);
std::string thomason_text(const ValuationSpectrum& spec, const ThomasonSet& set);

// Chain literal: {[p0,p1],[f0_j,f0_j]*}
std::string chain_text(const ValuationSpectrum& spec, const IntervalChain& chain);

}  // namespace smashlab
