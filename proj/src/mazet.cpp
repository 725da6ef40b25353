#include "smashlab/mazet.hpp"

#include "smashlab/error.hpp"

namespace smashlab {

namespace {

using Grid = std::vector<std::vector<FieldElement>>;

void require_group_spectrum(const ValuationSpectrum& spec) {
  if (!spec.group())
    fail(ErrorKind::UnsupportedComponent, "components need a spectrum built from a value group");
}

FieldElement field_zero(const GroupHandle& g, std::uint32_t p) {
  return FieldElement(g, Series(p), Series::constant(1, p));
}

FieldElement field_one(const GroupHandle& g, std::uint32_t p) {
  return FieldElement(g, Series::constant(1, p), Series::constant(1, p));
}

// Diagonalization over a valuation ring: U * A * V = diag(d), all reduced.
struct LocalSnf {
  Grid u, v;
  std::vector<FieldElement> diag;
};

LocalSnf local_snf(const ComponentRing& ring, Grid a, const GroupHandle& g, std::uint32_t p) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  LocalSnf out;
  out.u.assign(m, std::vector<FieldElement>(m, field_zero(g, p)));
  out.v.assign(n, std::vector<FieldElement>(n, field_zero(g, p)));
  for (std::size_t i = 0; i < m; ++i) out.u[i][i] = field_one(g, p);
  for (std::size_t i = 0; i < n; ++i) out.v[i][i] = field_one(g, p);
  for (auto& row : a)
    for (auto& x : row) x = ring.reduce(x);

  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    std::size_t pr = m, pc = n;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (a[i][j].is_zero()) continue;
        if (pr == m || *a[i][j].valuation() < *a[pr][pc].valuation()) {
          pr = i;
          pc = j;
        }
      }
    if (pr == m) break;
    std::swap(a[k], a[pr]);
    std::swap(out.u[k], out.u[pr]);
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][k], a[i][pc]);
    for (std::size_t i = 0; i < n; ++i) std::swap(out.v[i][k], out.v[i][pc]);
    const FieldElement piv = a[k][k];
    for (std::size_t i = k + 1; i < m; ++i) {
      if (a[i][k].is_zero()) continue;
      const FieldElement c = a[i][k] / piv;
      for (std::size_t j = k; j < n; ++j) a[i][j] = ring.reduce(a[i][j] - c * a[k][j]);
      for (std::size_t j = 0; j < m; ++j) out.u[i][j] = ring.reduce(out.u[i][j] - c * out.u[k][j]);
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a[k][j].is_zero()) continue;
      const FieldElement c = a[k][j] / piv;
      for (std::size_t i = 0; i < n; ++i) out.v[i][j] = ring.reduce(out.v[i][j] - c * out.v[i][k]);
      a[k][j] = field_zero(g, p);
    }
    out.diag.push_back(piv);
  }
  return out;
}

Grid image(const ComponentRing& ring, const ValMatrix& m) {
  Grid out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.emplace_back();
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.back().push_back(ring.reduce(FieldElement(m.at(i, j))));
  }
  return out;
}

bool verify_component(const ComponentRing& ring, const FieldElement& s, const ValMatrix& pm,
                      const ValMatrix& ym, const ValMatrix& qm) {
  const GroupHandle& g = ym.group();
  const std::uint32_t p = ym.characteristic();
  const Grid y = image(ring, ym);
  const Grid pv = image(ring, pm);
  const Grid qv = image(ring, qm);
  const std::size_t m = ym.rows(), n = ym.cols();
  const LocalSnf d = local_snf(ring, y, g, p);
  const std::size_t rank = d.diag.size();

  // Y Z = Q  <=>  D W = U Q with Z = V W.
  std::vector<FieldElement> uq(m, field_zero(g, p));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) uq[i] = ring.reduce(uq[i] + d.u[i][k] * qv[k][0]);
  std::vector<FieldElement> w(n, field_zero(g, p));
  for (std::size_t i = 0; i < m; ++i) {
    if (i < rank) {
      if (!ring.divides(d.diag[i], uq[i])) return false;
      w[i] = ring.reduce(uq[i] / d.diag[i]);
    } else if (!ring.is_zero(uq[i])) {
      return false;
    }
  }

  // X Y = P  <=>  X' D = P V with X' = X U^{-1}.
  std::vector<FieldElement> pv_v(n, field_zero(g, p));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) pv_v[j] = ring.reduce(pv_v[j] + pv[0][k] * d.v[k][j]);
  for (std::size_t j = 0; j < n; ++j) {
    if (j < rank) {
      if (!ring.divides(d.diag[j], pv_v[j])) return false;
    } else if (!ring.is_zero(pv_v[j])) {
      return false;
    }
  }

  // P Z = (P V) W; any other solution Z differs by a kernel vector killed by X Y.
  FieldElement value = field_zero(g, p);
  for (std::size_t j = 0; j < n; ++j) value = ring.reduce(value + pv_v[j] * w[j]);
  return ring.equal(value, s);
}

}  // namespace

ComponentRing::ComponentRing(const ValuationSpectrum& spec, const AdmissibleInterval& iv)
    : group_((require_group_spectrum(spec), spec.group())),
      local_(Cut::loc_cone(group_, group_->zero(), spec.subgroup_of(iv.upper))),
      kernel_(prime_cut(group_, spec.subgroup_of(iv.lower))) {}

bool ComponentRing::contains(const FieldElement& x) const {
  return x.is_zero() || cut_contains(local_, *x.valuation());
}

bool ComponentRing::is_zero(const FieldElement& x) const {
  return x.is_zero() || cut_contains(kernel_, *x.valuation());
}

bool ComponentRing::divides(const FieldElement& a, const FieldElement& b) const {
  if (is_zero(b)) return true;
  if (is_zero(a)) return false;
  return cut_contains(local_, *b.valuation() - *a.valuation());
}

FieldElement ComponentRing::reduce(const FieldElement& x) const {
  if (!x.is_zero() && is_zero(x))
    return FieldElement(group_, Series(x.num().characteristic()),
                        Series::constant(1, x.num().characteristic()));
  return x;
}

bool ComponentRing::equal(const FieldElement& a, const FieldElement& b) const {
  return is_zero(a - b);
}

bool verify_mazet(const ValuationSpectrum& spec, const HomEpiDescriptor& f,
                  const ComponentVector& s, const ValMatrix& p, const ValMatrix& y,
                  const ValMatrix& q) {
  require_group_spectrum(spec);
  if (!f.finite) fail(ErrorKind::UnsupportedComponent, "target has infinitely many components");
  if (p.rows() != 1 || q.cols() != 1 || p.cols() != y.cols() || q.rows() != y.rows())
    fail(ErrorKind::DimensionMismatch, "need P: 1 x n, Y: m x n, Q: m x 1");
  if (s.size() != f.components.size())
    fail(ErrorKind::DimensionMismatch, "s has " + std::to_string(s.size()) +
                                           " components, target has " +
                                           std::to_string(f.components.size()));
  for (std::size_t c = 0; c < s.size(); ++c) {
    const ComponentRing ring(spec, f.components[c]);
    if (!ring.contains(s[c]))
      fail(ErrorKind::UnsupportedComponent,
           s[c].to_string() + " is not an element of " + component_ring(spec, f.components[c]));
    if (!verify_component(ring, s[c], p, y, q)) return false;
  }
  return true;
}

MazetPresentation mazet_for_localization(const ValuationSpectrum& spec, const RingElement& r,
                                         const RingElement& sigma, PrimeRef target) {
  require_group_spectrum(spec);
  const Cut prime = prime_cut(spec.group(), spec.subgroup_of(target));
  if (sigma.is_zero() || cut_contains(prime, *sigma.valuation()))
    fail(ErrorKind::SigmaInPrime, sigma.to_string() + " lies in " + spec.name(target));
  const GroupHandle& g = spec.group();
  return {ValMatrix(g, {{r}}), ValMatrix(g, {{sigma}}),
          ValMatrix(g, {{RingElement::one(g, r.characteristic())}})};
}

std::vector<LocalRun> locally_constant_decomposition(const ValuationSpectrum& spec,
                                                     const HomEpiDescriptor& f,
                                                     const ComponentVector& s) {
  require_group_spectrum(spec);
  if (!f.finite) fail(ErrorKind::UnsupportedComponent, "target has infinitely many components");
  if (s.size() != f.components.size())
    fail(ErrorKind::DimensionMismatch, "s does not match the number of components");
  std::vector<LocalRun> runs;
  for (std::size_t c = 0; c < s.size(); ++c) {
    const ComponentRing ring(spec, f.components[c]);
    if (!ring.contains(s[c]))
      fail(ErrorKind::UnsupportedComponent,
           s[c].to_string() + " is not an element of " + component_ring(spec, f.components[c]));
    // Neighbouring components glue when their values agree modulo the
    // lower prime of the later one.
    if (!runs.empty()) {
      const ComponentRing next(spec, {f.components[c].lower, f.components[c].lower});
      if (next.is_zero(s[c - 1] - s[c])) {
        runs.back().last = c;
        continue;
      }
    }
    runs.push_back({c, c, s[c]});
  }
  return runs;
}

}  // namespace smashlab
