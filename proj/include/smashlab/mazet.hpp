#pragma once

#include <vector>

#include "smashlab/gps_ring.hpp"
#include "smashlab/ideal_cuts.hpp"
#include "smashlab/smashing.hpp"

namespace smashlab {

// The ring R_q / j for one admissible interval [j, q], with elements given by
// representatives in the fraction field.
class ComponentRing {
 public:
  ComponentRing(const ValuationSpectrum& spec, const AdmissibleInterval& iv);

  bool contains(const FieldElement& x) const;
  bool is_zero(const FieldElement& x) const;
  bool divides(const FieldElement& a, const FieldElement& b) const;
  FieldElement reduce(const FieldElement& x) const;
  bool equal(const FieldElement& a, const FieldElement& b) const;

 private:
  GroupHandle group_;
  Cut local_;   // values of R_q
  Cut kernel_;  // values of j
};

using ComponentVector = std::vector<FieldElement>;

// Decides whether X (1 x m) and Z (n x 1) over the target exist with
// X f(Y) = f(P), f(Y) Z = f(Q) and f(P) Z = s.
bool verify_mazet(const ValuationSpectrum& spec, const HomEpiDescriptor& f,
                  const ComponentVector& s, const ValMatrix& p, const ValMatrix& y,
                  const ValMatrix& q);

struct MazetPresentation {
  ValMatrix P, Y, Q;
};

// ([r], [sigma], [1]) for s = r / sigma in R_target; sigma must avoid the prime.
MazetPresentation mazet_for_localization(const ValuationSpectrum& spec, const RingElement& r,
                                         const RingElement& sigma, PrimeRef target);

struct LocalRun {
  std::size_t first = 0;
  std::size_t last = 0;
  FieldElement element;
};

// Coarsest splitting of the components into consecutive runs on which s is
// the image of a single element of the covering ring.
std::vector<LocalRun> locally_constant_decomposition(const ValuationSpectrum& spec,
                                                     const HomEpiDescriptor& f,
                                                     const ComponentVector& s);

}  // namespace smashlab
