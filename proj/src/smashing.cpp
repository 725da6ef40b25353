#include "smashlab/smashing.hpp"

#include <algorithm>
#include <climits>

#include "smashlab/error.hpp"

namespace smashlab {

namespace {

using Pos = std::pair<std::size_t, long long>;

Pos pos(const ValuationSpectrum& spec, PrimeRef p) {
  spec.require(p);
  switch (spec.slots()[p.slot].shape) {
    case PrimeSlot::Shape::OmegaDescending:
      return {p.slot, -static_cast<long long>(p.member)};
    case PrimeSlot::Shape::OmegaAscending:
      return {p.slot, static_cast<long long>(p.member)};
    default:
      return {p.slot, 0};
  }
}

void require_family(const ValuationSpectrum& spec, std::size_t slot) {
  if (slot >= spec.slots().size() || spec.slots()[slot].shape == PrimeSlot::Shape::Single)
    fail(ErrorKind::UnknownPrime, "no prime family at slot " + std::to_string(slot));
}

Pos low(const ValuationSpectrum& spec, const ChainItem& item) {
  if (item.kind == ChainItem::Kind::Family) return {item.family_slot, LLONG_MIN};
  return pos(spec, item.interval.lower);
}

Pos high(const ValuationSpectrum& spec, const ChainItem& item) {
  if (item.kind == ChainItem::Kind::Family) return {item.family_slot, LLONG_MAX};
  return pos(spec, item.interval.upper);
}

std::string item_text(const ValuationSpectrum& spec, const ChainItem& item) {
  if (item.kind == ChainItem::Kind::Family) {
    const std::string f = spec.slots()[item.family_slot].name + "_j";
    return "[" + f + "," + f + "]*";
  }
  return "[" + spec.name(item.interval.lower) + "," + spec.name(item.interval.upper) + "]";
}

ChainValidation violation(ViolationKind kind, std::string detail) {
  return {false, kind, std::move(detail)};
}

std::string merged_name(const ValuationSpectrum& spec, PrimeRef lower, const std::string& upper,
                        bool upper_is_top) {
  if (lower.slot == 0 && upper_is_top) return "R";
  if (upper_is_top) return "R/" + spec.name(lower);
  if (lower.slot == 0) return "R_" + upper;
  return "R_" + upper + "/" + spec.name(lower);
}

}  // namespace

bool IntervalChain::finite() const {
  return std::none_of(items.begin(), items.end(),
                      [](const ChainItem& i) { return i.kind == ChainItem::Kind::Family; });
}

std::string violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Order:
      return "Order";
    case ViolationKind::NotAdmissible:
      return "NotAdmissible";
    case ViolationKind::C1:
      return "C1";
    case ViolationKind::C2:
      return "C2";
    case ViolationKind::C3:
      return "C3";
  }
  return "?";
}

IntervalChain sorted_chain(const ValuationSpectrum& spec, const IntervalChain& chain) {
  IntervalChain out = chain;
  std::stable_sort(out.items.begin(), out.items.end(),
                   [&](const ChainItem& a, const ChainItem& b) {
                     return std::pair(low(spec, a), high(spec, a)) <
                            std::pair(low(spec, b), high(spec, b));
                   });
  return out;
}

ChainValidation validate_chain(const ValuationSpectrum& spec, const IntervalChain& chain) {
  for (const auto& item : chain.items) {
    if (item.kind == ChainItem::Kind::Family) {
      require_family(spec, item.family_slot);
      if (!spec.slots()[item.family_slot].idempotent)
        return violation(ViolationKind::NotAdmissible,
                         item_text(spec, item) + ": family members are not idempotent");
      continue;
    }
    const auto& iv = item.interval;
    spec.require(iv.lower);
    spec.require(iv.upper);
    if (!spec.idempotent(iv.lower))
      return violation(ViolationKind::NotAdmissible,
                       item_text(spec, item) + ": lower prime is not idempotent");
    if (spec.compare(iv.lower, iv.upper) > 0)
      return violation(ViolationKind::NotAdmissible,
                       item_text(spec, item) + ": lower prime lies above upper prime");
  }

  const IntervalChain sorted = sorted_chain(spec, chain);
  const auto& items = sorted.items;
  for (std::size_t k = 1; k < items.size(); ++k)
    if (!(high(spec, items[k - 1]) < low(spec, items[k])))
      return violation(ViolationKind::Order, item_text(spec, items[k - 1]) + " and " +
                                                 item_text(spec, items[k]) +
                                                 " are not strictly separated");

  // A descending family has no minimal item, so something must end exactly at
  // its infimum (the single slot below); dually for ascending families.
  for (const auto& item : items) {
    if (item.kind != ChainItem::Kind::Family) continue;
    const std::size_t s = item.family_slot;
    const bool descending = spec.slots()[s].shape == PrimeSlot::Shape::OmegaDescending;
    const PrimeRef cap = descending ? PrimeRef{s - 1, 0} : PrimeRef{s + 1, 0};
    const bool capped = std::any_of(items.begin(), items.end(), [&](const ChainItem& other) {
      if (other.kind != ChainItem::Kind::Single) return false;
      return descending ? other.interval.upper == cap : other.interval.lower == cap;
    });
    if (!capped) {
      if (descending)
        return violation(ViolationKind::C1, item_text(spec, item) +
                                                " has no minimum and no interval ends at " +
                                                spec.name(cap));
      return violation(ViolationKind::C2, item_text(spec, item) +
                                              " has no maximum and no interval starts at " +
                                              spec.name(cap));
    }
  }
  // (C3) cannot fail here: every item of an omega-shaped family has an
  // immediate neighbour on its non-accumulating side.
  return {};
}

std::vector<IntervalChain> enumerate_smashing(const ValuationSpectrum& spec) {
  const auto intervals = admissible_intervals(spec);
  std::vector<IntervalChain> out;
  IntervalChain current;
  auto extend = [&](auto&& self, std::size_t min_lower) -> void {
    out.push_back(current);
    for (const auto& iv : intervals) {
      if (iv.lower.slot < min_lower) continue;
      current.items.push_back(ChainItem::single(iv.lower, iv.upper));
      self(self, iv.upper.slot + 1);
      current.items.pop_back();
    }
  };
  extend(extend, 0);
  auto key = [](const IntervalChain& c) {
    std::vector<std::pair<std::size_t, std::size_t>> k;
    for (const auto& i : c.items) k.emplace_back(i.interval.lower.slot, i.interval.upper.slot);
    return k;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const IntervalChain& a, const IntervalChain& b) { return key(a) < key(b); });
  return out;
}

std::string component_ring(const ValuationSpectrum& spec, const AdmissibleInterval& iv) {
  const bool up_bottom = iv.upper == spec.bottom();
  const bool low_top = iv.lower == spec.top();
  const bool up_top = iv.upper == spec.top();
  if (up_bottom) return "Q";
  if (low_top) return "k";
  if (iv.lower == iv.upper) return "k(" + spec.name(iv.lower) + ")";
  return merged_name(spec, iv.lower, spec.name(iv.upper), up_top);
}

bool is_flat(const IntervalChain& chain) {
  if (chain.items.empty()) return true;
  return chain.items.size() == 1 && chain.items[0].kind == ChainItem::Kind::Single &&
         chain.items[0].interval.lower == PrimeRef{0, 0};
}

std::vector<AdmissibleInterval> HomEpiDescriptor::stage(const ValuationSpectrum& spec,
                                                        std::uint32_t n) const {
  if (finite) return components;
  std::vector<AdmissibleInterval> out;
  const auto& items = chain.items;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& item = items[k];
    if (item.kind == ChainItem::Kind::Single) {
      const bool caps_next = k + 1 < items.size() &&
                             items[k + 1].kind == ChainItem::Kind::Family &&
                             spec.slots()[items[k + 1].family_slot].shape ==
                                 PrimeSlot::Shape::OmegaDescending;
      const bool caps_prev = k > 0 && items[k - 1].kind == ChainItem::Kind::Family &&
                             spec.slots()[items[k - 1].family_slot].shape ==
                                 PrimeSlot::Shape::OmegaAscending;
      AdmissibleInterval iv = item.interval;
      if (caps_next) iv.upper = {items[k + 1].family_slot, n + 1};
      if (caps_prev) iv.lower = {items[k - 1].family_slot, n + 1};
      out.push_back(iv);
      continue;
    }
    const std::size_t s = item.family_slot;
    if (spec.slots()[s].shape == PrimeSlot::Shape::OmegaDescending) {
      for (std::uint32_t j = n; j >= 1; --j) out.push_back({{s, j}, {s, j}});
    } else {
      for (std::uint32_t j = 1; j <= n; ++j) out.push_back({{s, j}, {s, j}});
    }
  }
  return out;
}

HomEpiDescriptor classify_chain(const ValuationSpectrum& spec, const IntervalChain& chain) {
  const auto check = validate_chain(spec, chain);
  if (!check.valid)
    fail(ErrorKind::InvalidChain, violation_name(check.kind) + ": " + check.detail);
  HomEpiDescriptor d;
  d.chain = sorted_chain(spec, chain);
  d.finite = d.chain.finite();
  d.is_flat = is_flat(d.chain);
  d.is_compactly_generated = d.is_flat;
  d.is_universal_localization = d.is_flat;
  const auto& items = d.chain.items;
  if (items.empty()) {
    d.ring = "0";
    return d;
  }
  d.kernel = items[0].kind == ChainItem::Kind::Single ? items[0].interval.lower
                                                      : PrimeRef{items[0].family_slot, 1};
  if (d.finite) {
    for (const auto& item : items) {
      d.components.push_back(item.interval);
      if (!d.ring.empty()) d.ring += " x ";
      d.ring += component_ring(spec, item.interval);
    }
    return d;
  }

  std::vector<std::string> parts;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& item = items[k];
    if (item.kind == ChainItem::Kind::Family) {
      const std::string f = spec.slots()[item.family_slot].name;
      if (spec.slots()[item.family_slot].shape == PrimeSlot::Shape::OmegaDescending)
        parts.push_back("k(" + f + "_n) x ... x k(" + f + "_1)");
      else
        parts.push_back("k(" + f + "_1) x ... x k(" + f + "_n)");
      continue;
    }
    const auto& iv = item.interval;
    const bool caps_next = k + 1 < items.size() && items[k + 1].kind == ChainItem::Kind::Family &&
                           spec.slots()[items[k + 1].family_slot].shape ==
                               PrimeSlot::Shape::OmegaDescending;
    const bool caps_prev = k > 0 && items[k - 1].kind == ChainItem::Kind::Family &&
                           spec.slots()[items[k - 1].family_slot].shape ==
                               PrimeSlot::Shape::OmegaAscending;
    if (caps_next) {
      const std::string up = spec.slots()[items[k + 1].family_slot].name + "_{n+1}";
      parts.push_back(merged_name(spec, iv.lower, up, false));
    } else if (caps_prev) {
      const std::string lo = spec.slots()[items[k - 1].family_slot].name + "_{n+1}";
      const bool up_top = iv.upper == spec.top();
      parts.push_back(up_top ? "R/" + lo : "R_" + spec.name(iv.upper) + "/" + lo);
    } else {
      parts.push_back(component_ring(spec, iv));
    }
  }
  d.ring = "colim_n ";
  for (std::size_t k = 0; k < parts.size(); ++k) d.ring += (k ? " x " : "") + parts[k];
  return d;
}

bool tc_holds(const ValuationSpectrum& spec) {
  for (std::size_t s = 1; s < spec.slots().size(); ++s)
    if (spec.slots()[s].idempotent) return false;
  return true;
}

bool tc_holds_family(const std::vector<ValuationSpectrum>& specs) {
  return std::all_of(specs.begin(), specs.end(),
                     [](const ValuationSpectrum& s) { return tc_holds(s); });
}

std::vector<ThomasonSet> thomason_sets(const ValuationSpectrum& spec) {
  const std::size_t n = spec.size();
  std::vector<ThomasonSet> out{ThomasonSet{}};
  for (std::size_t k = n; k-- > 0;) out.push_back(ThomasonSet{k});
  return out;
}

ThomasonSet chain_to_thomason(const ValuationSpectrum& spec, const IntervalChain& chain) {
  const std::size_t n = spec.size();
  if (!is_flat(chain)) fail(ErrorKind::NotFlat, chain_text(spec, chain) + " is not flat");
  if (chain.items.empty()) return ThomasonSet{0};
  const std::size_t above = chain.items[0].interval.upper.slot + 1;
  if (above >= n) return ThomasonSet{};
  return ThomasonSet{above};
}

std::string thomason_text(const ValuationSpectrum& spec, const ThomasonSet& set) {
  std::string s = "{";
  if (set.least)
    for (std::size_t k = *set.least; k < spec.slots().size(); ++k) {
      if (k != *set.least) s += ",";
      s += spec.slots()[k].name;
    }
  return s + "}";
}

std::string chain_text(const ValuationSpectrum& spec, const IntervalChain& chain) {
  std::string s = "{";
  for (std::size_t k = 0; k < chain.items.size(); ++k) {
    if (k) s += ",";
    s += item_text(spec, chain.items[k]);
  }
  return s + "}";
}

}  // namespace smashlab
