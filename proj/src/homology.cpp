#include "smashlab/homology.hpp"

#include "smashlab/error.hpp"

namespace smashlab {

namespace {

Cut closed_zero(const GroupHandle& g) { return Cut::closed(g, g->zero()); }

// Submodule sum is the union of value sets, intersection the intersection.
Cut sum(const Cut& a, const Cut& b) { return ideal_sum(a, b); }
Cut meet(const Cut& a, const Cut& b) { return ideal_intersection(a, b); }

std::vector<AdmissibleInterval> finite_components(const ValuationSpectrum& spec,
                                                  const IntervalChain& chain) {
  const auto check = validate_chain(spec, chain);
  if (!check.valid)
    fail(ErrorKind::InvalidChain, violation_name(check.kind) + ": " + check.detail);
  if (!chain.finite())
    fail(ErrorKind::InvalidChain, "chain has infinitely many components");
  return classify_chain(spec, chain).components;
}

}  // namespace

StdModule::StdModule(Cut numerator, Cut denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_group(num_, den_);
  if (!cut_leq(den_, num_))
    fail(ErrorKind::InvalidModule,
         den_.to_string() + " is not a submodule of " + num_.to_string());
}

StdModule StdModule::cyclic(const Cut& ideal) {
  if (!is_integral(ideal)) fail(ErrorKind::NotAnIdeal, ideal.to_string() + " is not an ideal");
  return StdModule(closed_zero(ideal.group()), ideal);
}

StdModule StdModule::ring(const GroupHandle& g) { return StdModule(closed_zero(g), Cut::zero(g)); }

StdModule StdModule::fraction_field(const GroupHandle& g) {
  return StdModule(Cut::all(g), Cut::zero(g));
}

StdModule StdModule::zero(const GroupHandle& g) {
  return StdModule(closed_zero(g), closed_zero(g));
}

StdModule StdModule::component(const ValuationSpectrum& spec, const AdmissibleInterval& iv) {
  const GroupHandle& g = spec.group();
  if (!g) fail(ErrorKind::UnsupportedComponent, "spectrum was not built from a value group");
  return StdModule(Cut::loc_cone(g, g->zero(), spec.subgroup_of(iv.upper)),
                   prime_cut(g, spec.subgroup_of(iv.lower)));
}

std::string StdModule::to_string() const {
  if (is_zero()) return "0";
  const GroupHandle& g = group();
  if (num_ == Cut::all(g) && den_ == Cut::zero(g)) return "Q";
  if (num_ == closed_zero(g)) return den_ == Cut::zero(g) ? "R" : "R/" + den_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

StdModule tor0(const StdModule& m, const StdModule& n) {
  require_same_group(m.numerator(), n.numerator());
  const Cut& a = m.numerator();
  const Cut& b = m.denominator();
  const Cut& c = n.numerator();
  const Cut& d = n.denominator();
  return StdModule(minkowski(a, c), sum(minkowski(a, d), minkowski(b, c)));
}

StdModule tor1(const StdModule& m, const StdModule& n) {
  require_same_group(m.numerator(), n.numerator());
  const Cut& a = m.numerator();
  const Cut& b = m.denominator();
  const Cut& c = n.numerator();
  const Cut& d = n.denominator();
  // Kernel of B (x) N -> A (x) N, i.e. of BC/BD -> AC/AD.
  return StdModule(meet(minkowski(b, c), minkowski(a, d)), minkowski(b, d));
}

bool tor_orthogonal(const StdModule& m, const StdModule& n) {
  return tor0(m, n).is_zero() && tor1(m, n).is_zero();
}

bool idempotent_kernel_test(const Cut& ideal) {
  const StdModule quotient = StdModule::cyclic(ideal);
  const bool by_tor = tor1(quotient, quotient).is_zero();
  const bool by_square = is_idempotent(ideal);
  if (by_tor != by_square)
    fail(ErrorKind::InvariantViolation,
         "Tor_1(R/I,R/I) and I^2 = I disagree for " + ideal.to_string());
  return by_tor;
}

bool interval_orthogonality(const ValuationSpectrum& spec, const AdmissibleInterval& a,
                            const AdmissibleInterval& b) {
  return tor_orthogonal(StdModule::component(spec, a), StdModule::component(spec, b));
}

bool is_component_module(const ValuationSpectrum& spec, const AdmissibleInterval& iv,
                         const StdModule& n) {
  if (n.is_zero()) return true;
  const GroupHandle& g = spec.group();
  const Cut local = Cut::loc_cone(g, g->zero(), spec.subgroup_of(iv.upper));
  const Cut kernel = prime_cut(g, spec.subgroup_of(iv.lower));
  const bool killed = cut_leq(minkowski(kernel, n.numerator()), n.denominator());
  const bool local_action = minkowski(local, n.numerator()) == n.numerator() &&
                            minkowski(local, n.denominator()) == n.denominator();
  return killed && local_action;
}

bool smashing_membership(const ValuationSpectrum& spec, const FormalComplex& x,
                         const IntervalChain& chain) {
  const auto comps = finite_components(spec, chain);
  for (const auto& [degree, h] : x) {
    (void)degree;
    for (const auto& iv : comps)
      if (!tor_orthogonal(h, StdModule::component(spec, iv))) return false;
  }
  return true;
}

bool kunneth_vanishing(const FormalComplex& x, const FormalComplex& y) {
  for (const auto& [p, hx] : x) {
    (void)p;
    for (const auto& [q, hy] : y) {
      (void)q;
      if (!tor_orthogonal(hx, hy)) return false;
    }
  }
  return true;
}

bool in_x0(const ValuationSpectrum& spec, const StdModule& n, const IntervalChain& chain) {
  for (const auto& iv : finite_components(spec, chain))
    if (!tor_orthogonal(n, StdModule::component(spec, iv))) return false;
  return true;
}

FiveTerm five_term(const ValuationSpectrum& spec, const StdModule& m, const IntervalChain& chain) {
  const auto comps = finite_components(spec, chain);
  const GroupHandle& g = m.group();
  std::optional<std::size_t> acting;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (tor_orthogonal(m, StdModule::component(spec, comps[k]))) continue;
    if (acting)
      fail(ErrorKind::UnsupportedCutCombination,
           "five_term supports modules seen by a single chain component");
    acting = k;
  }
  // S acts on M through one component; if none does, S (x) M vanishes and
  // the zero module closed(0)/closed(0) stands in for S.
  const StdModule s = acting ? StdModule::component(spec, comps[*acting]) : StdModule::zero(g);
  const Cut& a = m.numerator();
  const Cut& b = m.denominator();
  const Cut& c = s.numerator();
  const Cut& d = s.denominator();
  const Cut ad = minkowski(a, d);
  const Cut bc = minkowski(b, c);
  const Cut ad_bc = sum(ad, bc);

  FiveTerm out{tor1(m, s),
               StdModule(meet(a, bc), b),
               StdModule(meet(ad, sum(a, bc)), minkowski(b, d)),
               StdModule(meet(a, ad_bc), b),
               tor0(m, s),
               StdModule(minkowski(a, c), sum(a, ad_bc)),
               acting};

  if (!comps.empty()) {
    if (!in_x0(spec, out.xm_sub, chain) || !in_x0(spec, out.xm_quotient, chain))
      fail(ErrorKind::InvariantViolation, "X_M is not orthogonal to the chain");
    if (!in_x0(spec, out.xup, chain))
      fail(ErrorKind::InvariantViolation, "X^M is not orthogonal to the chain");
    if (acting && !is_component_module(spec, comps[*acting], out.tensored))
      fail(ErrorKind::InvariantViolation, "M (x) S is not an S-module");
  }
  return out;
}

}  // namespace smashlab
