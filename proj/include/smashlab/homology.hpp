#pragma once

#include <map>
#include <optional>
#include <string>

#include "smashlab/ideal_cuts.hpp"
#include "smashlab/smashing.hpp"

namespace smashlab {

// numerator / denominator for value cuts denominator ⊆ numerator: the
// module A/B of two R-submodules of the fraction field.
class StdModule {
 public:
  StdModule(Cut numerator, Cut denominator);

  static StdModule cyclic(const Cut& ideal);  // R / I
  static StdModule ring(const GroupHandle& g);
  static StdModule fraction_field(const GroupHandle& g);
  static StdModule zero(const GroupHandle& g);
  // R_q / j for an interval of a group-built spectrum.
  static StdModule component(const ValuationSpectrum& spec, const AdmissibleInterval& iv);

  const Cut& numerator() const { return num_; }
  const Cut& denominator() const { return den_; }
  const GroupHandle& group() const { return num_.group(); }

  bool is_zero() const { return num_ == den_; }
  bool operator==(const StdModule& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string() const;

 private:
  Cut num_;
  Cut den_;
};

StdModule tor0(const StdModule& m, const StdModule& n);
StdModule tor1(const StdModule& m, const StdModule& n);

// Vanishing of both Tor_0 and Tor_1.
bool tor_orthogonal(const StdModule& m, const StdModule& n);

// Tor_1(R/I, R/I) = 0, checked against I^2 = I; throws InvariantViolation
// if the two routes disagree.
bool idempotent_kernel_test(const Cut& ideal);

bool interval_orthogonality(const ValuationSpectrum& spec, const AdmissibleInterval& a,
                            const AdmissibleInterval& b);

// Whether N is a module over the component R_q/j: j kills it and R_q acts.
bool is_component_module(const ValuationSpectrum& spec, const AdmissibleInterval& iv,
                         const StdModule& n);

using FormalComplex = std::map<int, StdModule>;

bool smashing_membership(const ValuationSpectrum& spec, const FormalComplex& x,
                         const IntervalChain& chain);
bool kunneth_vanishing(const FormalComplex& x, const FormalComplex& y);

struct FiveTerm {
  StdModule t1;           // Tor_1(M, S)
  StdModule xm_sub;       // X_M is an extension of xm_quotient by xm_sub
  StdModule xm_quotient;
  StdModule kernel;       // kernel of M -> M (x) S
  StdModule tensored;     // M (x) S
  StdModule xup;          // cokernel of M -> M (x) S
  std::optional<std::size_t> component;  // the chain component acting on M

  bool xm_is_zero() const { return xm_sub.is_zero() && xm_quotient.is_zero(); }
};

// 0 -> Tor_1(M,S) -> X_M -> M -> M (x) S -> X^M -> 0 for a finite valid chain.
// At most one component may see M; more raise UnsupportedCutCombination.
FiveTerm five_term(const ValuationSpectrum& spec, const StdModule& m, const IntervalChain& chain);

// Orthogonal to every component of the chain (the class X_0).
bool in_x0(const ValuationSpectrum& spec, const StdModule& n, const IntervalChain& chain);

}  // namespace smashlab
