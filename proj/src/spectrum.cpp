#include "smashlab/spectrum.hpp"

#include <charconv>

#include "smashlab/error.hpp"

namespace smashlab {

namespace {

void assign_names(std::vector<PrimeSlot>& slots) {
  std::size_t singles = 0, families = 0;
  for (auto& s : slots)
    s.name = s.shape == PrimeSlot::Shape::Single ? "p" + std::to_string(singles++)
                                                 : "f" + std::to_string(families++);
}

void validate(const std::vector<PrimeSlot>& slots) {
  using Shape = PrimeSlot::Shape;
  if (slots.empty()) fail(ErrorKind::InvalidFlags, "a spectrum needs at least the zero prime");
  if (slots[0].shape != Shape::Single || !slots[0].idempotent)
    fail(ErrorKind::InvalidFlags, "the zero prime must be a single idempotent prime");
  if (slots.back().shape != Shape::Single)
    fail(ErrorKind::InvalidSpectrum, "the maximal ideal must be a single prime");
  for (std::size_t s = 1; s + 1 < slots.size(); ++s) {
    if (slots[s].shape == Shape::Single) continue;
    if (slots[s - 1].shape != Shape::Single || slots[s + 1].shape != Shape::Single)
      fail(ErrorKind::InvalidSpectrum, "families must be separated by single primes");
    if (slots[s].shape == Shape::OmegaAscending && !slots[s + 1].idempotent)
      fail(ErrorKind::InvalidSpectrum,
           "the union of an ascending family of primes is idempotent, but slot " +
               std::to_string(s + 1) + " is flagged non-idempotent");
  }
}

// Position of a prime in the chain; within a family the member index
// moves down (descending family) or up (ascending family).
std::pair<std::size_t, long long> position(const std::vector<PrimeSlot>& slots, PrimeRef p) {
  const auto shape = slots[p.slot].shape;
  long long r = 0;
  if (shape == PrimeSlot::Shape::OmegaDescending) r = -static_cast<long long>(p.member);
  if (shape == PrimeSlot::Shape::OmegaAscending) r = static_cast<long long>(p.member);
  return {p.slot, r};
}

}  // namespace

ValuationSpectrum ValuationSpectrum::from_slots(std::vector<PrimeSlot> slots) {
  validate(slots);
  assign_names(slots);
  ValuationSpectrum out;
  out.slots_ = std::move(slots);
  return out;
}

ValuationSpectrum ValuationSpectrum::from_flags(const std::vector<bool>& flags) {
  if (flags.empty()) fail(ErrorKind::InvalidFlags, "empty flag list");
  if (!flags[0]) fail(ErrorKind::InvalidFlags, "the zero prime is always idempotent");
  std::vector<PrimeSlot> slots;
  for (bool f : flags) slots.push_back({PrimeSlot::Shape::Single, f, {}});
  return from_slots(std::move(slots));
}

ValuationSpectrum ValuationSpectrum::from_group(GroupHandle g) {
  const auto& chain = g->convex_chain();
  std::vector<PrimeSlot> slots;
  for (std::size_t k = chain.size(); k-- > 0;) {
    PrimeSlot slot;
    if (chain[k].shape == ChainSlot::Shape::Single) {
      slot.idempotent = k + 1 == chain.size() || !g->has_least_positive_mod({k, 0});
    } else {
      slot.shape = PrimeSlot::Shape::OmegaDescending;
      slot.idempotent = !g->has_least_positive_mod({k, 1});
    }
    slots.push_back(slot);
  }
  ValuationSpectrum out = from_slots(std::move(slots));
  out.group_ = std::move(g);
  return out;
}

bool ValuationSpectrum::is_finite() const {
  for (const auto& s : slots_)
    if (s.shape != PrimeSlot::Shape::Single) return false;
  return true;
}

std::size_t ValuationSpectrum::size() const {
  if (!is_finite()) fail(ErrorKind::InfiniteSpectrum, "spectrum contains an omega family");
  return slots_.size();
}

std::vector<PrimeRef> ValuationSpectrum::primes() const {
  std::vector<PrimeRef> out;
  for (std::size_t s = 0; s < size(); ++s) out.push_back({s, 0});
  return out;
}

void ValuationSpectrum::require(PrimeRef p) const {
  const bool ok = p.slot < slots_.size() &&
                  ((slots_[p.slot].shape == PrimeSlot::Shape::Single) == (p.member == 0));
  if (!ok)
    fail(ErrorKind::UnknownPrime, "no prime at slot " + std::to_string(p.slot) + " member " +
                                      std::to_string(p.member));
}

std::string ValuationSpectrum::name(PrimeRef p) const {
  require(p);
  if (p.member == 0) return slots_[p.slot].name;
  return slots_[p.slot].name + "_" + std::to_string(p.member);
}

PrimeRef ValuationSpectrum::find(std::string_view name) const {
  const auto underscore = name.find('_');
  const std::string_view head = name.substr(0, underscore);
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (slots_[s].name != head) continue;
    if (underscore == std::string_view::npos) {
      if (slots_[s].shape == PrimeSlot::Shape::Single) return {s, 0};
      break;
    }
    const std::string_view tail = name.substr(underscore + 1);
    std::uint32_t member = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), member);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || member == 0 ||
        slots_[s].shape == PrimeSlot::Shape::Single)
      break;
    return {s, member};
  }
  fail(ErrorKind::UnknownPrime, "unknown prime '" + std::string(name) + "'");
}

bool ValuationSpectrum::idempotent(PrimeRef p) const {
  require(p);
  return slots_[p.slot].idempotent;
}

std::strong_ordering ValuationSpectrum::compare(PrimeRef a, PrimeRef b) const {
  require(a);
  require(b);
  return position(slots_, a) <=> position(slots_, b);
}

SubgroupId ValuationSpectrum::subgroup_of(PrimeRef p) const {
  require(p);
  if (!group_)
    fail(ErrorKind::UnsupportedComponent, "spectrum was not built from a value group");
  return {slots_.size() - 1 - p.slot, p.member};
}

std::string ValuationSpectrum::flags_literal() const {
  std::string s = "[";
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (k) s += ",";
    const std::string flag = slots_[k].idempotent ? "i" : "-";
    switch (slots_[k].shape) {
      case PrimeSlot::Shape::Single:
        s += flag;
        break;
      case PrimeSlot::Shape::OmegaDescending:
        s += "desc(" + flag + ")";
        break;
      case PrimeSlot::Shape::OmegaAscending:
        s += "asc(" + flag + ")";
        break;
    }
  }
  return s + "]";
}

std::string ValuationSpectrum::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (k) s += " < ";
    const auto& slot = slots_[k];
    switch (slot.shape) {
      case PrimeSlot::Shape::Single:
        s += slot.name;
        break;
      case PrimeSlot::Shape::OmegaDescending:
        s += "... < " + slot.name + "_2 < " + slot.name + "_1";
        break;
      case PrimeSlot::Shape::OmegaAscending:
        s += slot.name + "_1 < " + slot.name + "_2 < ...";
        break;
    }
    s += slot.idempotent ? " (idem)" : " (-)";
  }
  return s;
}

std::vector<AdmissibleInterval> admissible_intervals(const ValuationSpectrum& spec) {
  const std::size_t n = spec.size();
  std::vector<AdmissibleInterval> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!spec.slots()[i].idempotent) continue;
    for (std::size_t p = i; p < n; ++p) out.push_back({{i, 0}, {p, 0}});
  }
  return out;
}

std::vector<std::size_t> ispec(const ValuationSpectrum& spec) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < spec.slots().size(); ++s)
    if (spec.slots()[s].idempotent) out.push_back(s);
  return out;
}

GroupDescriptor realize_flags(const std::vector<bool>& flags) {
  if (flags.empty() || !flags[0])
    fail(ErrorKind::InvalidFlags, "the zero prime is always idempotent");
  if (flags.size() == 1)
    fail(ErrorKind::InvalidFlags, "a field has no nontrivial value group to realize");
  std::vector<GroupDescriptor> parts;
  for (std::size_t k = 1; k < flags.size(); ++k)
    parts.push_back(flags[k] ? GroupDescriptor::rationals() : GroupDescriptor::integers());
  return GroupDescriptor::lex(std::move(parts));
}

}  // namespace smashlab
