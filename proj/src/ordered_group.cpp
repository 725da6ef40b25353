#include "smashlab/ordered_group.hpp"

#include <algorithm>
#include <sstream>

#include "smashlab/error.hpp"

namespace smashlab {

namespace {

using Kind = GroupDescriptor::Kind;

std::strong_ordering order_of(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

void validate(const GroupDescriptor& d) {
  switch (d.kind) {
    case Kind::Int:
    case Kind::Rat:
      return;
    case Kind::IntLoc:
      if (d.base < 2)
        fail(ErrorKind::InvalidDescriptor,
             "Zloc(" + std::to_string(d.base) + "): base must be at least 2");
      return;
    case Kind::Lex:
      if (d.parts.empty()) fail(ErrorKind::InvalidDescriptor, "lex() needs at least one part");
      for (const auto& p : d.parts) validate(p);
      return;
    case Kind::AntilexOmega:
      if (d.parts.size() != 1)
        fail(ErrorKind::InvalidDescriptor, "antilex_omega takes exactly one base");
      if (!d.parts[0].archimedean())
        fail(ErrorKind::InvalidDescriptor,
             "antilex_omega base must be Z, Q or Zloc(n), got " + d.parts[0].to_string());
      validate(d.parts[0]);
      return;
  }
}

GroupElement zero_of(const GroupDescriptor& d) {
  switch (d.kind) {
    case Kind::Lex: {
      GroupElement::Tuple t;
      for (const auto& p : d.parts) t.push_back(zero_of(p));
      return GroupElement(std::move(t));
    }
    case Kind::AntilexOmega:
      return GroupElement(GroupElement::Support{});
    default:
      return GroupElement();
  }
}

bool scalar_in(const GroupDescriptor& d, const mpq_class& q) {
  switch (d.kind) {
    case Kind::Int:
      return q.get_den() == 1;
    case Kind::Rat:
      return true;
    case Kind::IntLoc: {
      mpz_class den = q.get_den();
      const mpz_class base(d.base);
      while (den != 1) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), base.get_mpz_t());
        if (g == 1) return false;
        den /= g;
      }
      return true;
    }
    default:
      return false;
  }
}

bool element_of(const GroupDescriptor& d, const GroupElement& x) {
  switch (d.kind) {
    case Kind::Int:
    case Kind::Rat:
    case Kind::IntLoc:
      return x.is_scalar() && scalar_in(d, x.scalar());
    case Kind::Lex: {
      if (!x.is_tuple() || x.coords().size() != d.parts.size()) return false;
      for (std::size_t i = 0; i < d.parts.size(); ++i)
        if (!element_of(d.parts[i], x.coords()[i])) return false;
      return true;
    }
    case Kind::AntilexOmega: {
      if (!x.is_support()) return false;
      for (const auto& [idx, v] : x.support())
        if (idx == 0 || v == 0 || !scalar_in(d.parts[0], v)) return false;
      return true;
    }
  }
  return false;
}

std::vector<ChainSlot> chain_of(const GroupDescriptor& d) {
  const ChainSlot trivial{ChainSlot::Shape::Single, Convex{Convex::Kind::Trivial, 0, 0, {}}};
  const ChainSlot whole{ChainSlot::Shape::Single, Convex{Convex::Kind::Whole, 0, 0, {}}};
  switch (d.kind) {
    case Kind::Int:
    case Kind::Rat:
    case Kind::IntLoc:
      return {trivial, whole};
    case Kind::AntilexOmega:
      return {trivial, ChainSlot{ChainSlot::Shape::OmegaAscending, Convex{Convex::Kind::Member, 0, 0, {}}},
              whole};
    case Kind::Lex: {
      std::vector<ChainSlot> out{trivial};
      for (std::size_t i = d.parts.size(); i-- > 0;) {
        auto sub = chain_of(d.parts[i]);
        for (std::size_t s = 1; s < sub.size(); ++s) {
          if (i == 0 && sub[s].subgroup.kind == Convex::Kind::Whole) {
            out.push_back(whole);
          } else {
            Convex c{Convex::Kind::Part, 0, 0, {}};
            c.part = i;
            c.inner.push_back(sub[s].subgroup);
            out.push_back(ChainSlot{sub[s].shape, std::move(c)});
          }
        }
      }
      return out;
    }
  }
  return {};
}

Convex instantiate(Convex c, std::uint32_t n) {
  if (c.kind == Convex::Kind::Member) c.member = n;
  if (c.kind == Convex::Kind::Part) c.inner[0] = instantiate(c.inner[0], n);
  return c;
}

bool contains(const GroupDescriptor& d, const Convex& c, const GroupElement& x) {
  switch (c.kind) {
    case Convex::Kind::Trivial:
      return x.is_zero();
    case Convex::Kind::Whole:
      return true;
    case Convex::Kind::Member:
      return x.support().empty() || x.support().rbegin()->first <= c.member;
    case Convex::Kind::Part: {
      const auto& xs = x.coords();
      for (std::size_t j = 0; j < c.part; ++j)
        if (!xs[j].is_zero()) return false;
      return contains(d.parts[c.part], c.inner[0], xs[c.part]);
    }
  }
  return false;
}

bool has_lp(const GroupDescriptor& d, const Convex& c) {
  switch (c.kind) {
    case Convex::Kind::Whole:
      return false;
    case Convex::Kind::Trivial:
      switch (d.kind) {
        case Kind::Int:
          return true;
        case Kind::Rat:
        case Kind::IntLoc:
          return false;
        case Kind::AntilexOmega:
          return has_lp(d.parts[0], c);
        case Kind::Lex:
          return has_lp(d.parts.back(), c);
      }
      return false;
    case Convex::Kind::Member:
      return has_lp(d.parts[0], Convex{});
    case Convex::Kind::Part:
      if (c.inner[0].kind == Convex::Kind::Whole) return has_lp(d.parts[c.part - 1], Convex{});
      return has_lp(d.parts[c.part], c.inner[0]);
  }
  return false;
}

GroupElement lp(const GroupDescriptor& d, const Convex& c) {
  switch (c.kind) {
    case Convex::Kind::Trivial:
      switch (d.kind) {
        case Kind::Int:
          return GroupElement::integer(1);
        case Kind::AntilexOmega: {
          const GroupElement b = lp(d.parts[0], c);
          return GroupElement(GroupElement::Support{{1u, b.scalar()}});
        }
        case Kind::Lex: {
          GroupElement::Tuple t = zero_of(d).coords();
          t.back() = lp(d.parts.back(), c);
          return GroupElement(std::move(t));
        }
        default:
          break;
      }
      break;
    case Convex::Kind::Member: {
      const GroupElement b = lp(d.parts[0], Convex{});
      return GroupElement(GroupElement::Support{{c.member + 1, b.scalar()}});
    }
    case Convex::Kind::Part: {
      GroupElement::Tuple t = zero_of(d).coords();
      if (c.inner[0].kind == Convex::Kind::Whole)
        t[c.part - 1] = lp(d.parts[c.part - 1], Convex{});
      else
        t[c.part] = lp(d.parts[c.part], c.inner[0]);
      return GroupElement(std::move(t));
    }
    case Convex::Kind::Whole:
      break;
  }
  fail(ErrorKind::InvariantViolation, "no least positive element in " + d.to_string());
}

GroupElement reduce(const GroupDescriptor& d, const Convex& c, const GroupElement& x) {
  switch (c.kind) {
    case Convex::Kind::Trivial:
      return x;
    case Convex::Kind::Whole:
      return zero_of(d);
    case Convex::Kind::Member: {
      GroupElement::Support s;
      for (const auto& [idx, v] : x.support())
        if (idx > c.member) s.emplace_back(idx, v);
      return GroupElement(std::move(s));
    }
    case Convex::Kind::Part: {
      GroupElement::Tuple t = x.coords();
      t[c.part] = reduce(d.parts[c.part], c.inner[0], t[c.part]);
      for (std::size_t j = c.part + 1; j < t.size(); ++j) t[j] = zero_of(d.parts[j]);
      return GroupElement(std::move(t));
    }
  }
  return x;
}

std::uint32_t max_index_of(const GroupElement& x) {
  if (x.is_support()) return x.support().empty() ? 0 : x.support().rbegin()->first;
  if (x.is_tuple()) {
    std::uint32_t m = 0;
    for (const auto& c : x.coords()) m = std::max(m, max_index_of(c));
    return m;
  }
  return 0;
}

mpq_class random_scalar(const GroupDescriptor& d, std::mt19937_64& rng, int scale) {
  std::uniform_int_distribution<int> num(-scale, scale);
  switch (d.kind) {
    case Kind::Int:
      return mpq_class(num(rng));
    case Kind::Rat: {
      std::uniform_int_distribution<int> den(1, 4);
      const int q = den(rng);
      std::uniform_int_distribution<int> n(-scale * q, scale * q);
      mpq_class r(n(rng), q);
      r.canonicalize();
      return r;
    }
    case Kind::IntLoc: {
      std::uniform_int_distribution<int> e(0, 2);
      long q = 1;
      for (int k = e(rng); k > 0; --k) q *= d.base;
      std::uniform_int_distribution<long> n(-scale * q, scale * q);
      mpq_class r(n(rng), q);
      r.canonicalize();
      return r;
    }
    default:
      return 0;
  }
}

GroupElement random_of(const GroupDescriptor& d, std::mt19937_64& rng, int scale) {
  switch (d.kind) {
    case Kind::Lex: {
      GroupElement::Tuple t;
      for (const auto& p : d.parts) t.push_back(random_of(p, rng, scale));
      return GroupElement(std::move(t));
    }
    case Kind::AntilexOmega: {
      GroupElement::Support s;
      std::bernoulli_distribution keep(0.5);
      for (std::uint32_t idx = 1; idx <= 4; ++idx)
        if (keep(rng)) {
          mpq_class v = random_scalar(d.parts[0], rng, scale);
          if (v != 0) s.emplace_back(idx, v);
        }
      return GroupElement(std::move(s));
    }
    default:
      return GroupElement(random_scalar(d, rng, scale));
  }
}

}  // namespace

GroupDescriptor GroupDescriptor::integers() { return {Kind::Int, 0, {}}; }
GroupDescriptor GroupDescriptor::rationals() { return {Kind::Rat, 0, {}}; }
GroupDescriptor GroupDescriptor::localized(long base) { return {Kind::IntLoc, base, {}}; }
GroupDescriptor GroupDescriptor::lex(std::vector<GroupDescriptor> parts) {
  return {Kind::Lex, 0, std::move(parts)};
}
GroupDescriptor GroupDescriptor::antilex_omega(GroupDescriptor base) {
  return {Kind::AntilexOmega, 0, {std::move(base)}};
}

bool GroupDescriptor::archimedean() const {
  return kind == Kind::Int || kind == Kind::Rat || kind == Kind::IntLoc;
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case Kind::Int:
      return "Z";
    case Kind::Rat:
      return "Q";
    case Kind::IntLoc:
      return "Zloc(" + std::to_string(base) + ")";
    case Kind::Lex: {
      std::string s = "lex(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i].to_string();
      }
      return s + ")";
    }
    case Kind::AntilexOmega:
      return "antilex_omega(" + (parts.empty() ? std::string("?") : parts[0].to_string()) + ")";
  }
  return "?";
}

GroupElement::GroupElement(mpq_class value) : rep_(std::move(value)) {
  std::get<0>(rep_).canonicalize();
}

GroupElement::GroupElement(Support support) {
  std::stable_sort(support.begin(), support.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Support merged;
  merged.reserve(support.size());
  for (auto& kv : support) {
    if (!merged.empty() && merged.back().first == kv.first)
      merged.back().second += kv.second;
    else
      merged.push_back(std::move(kv));
  }
  std::erase_if(merged, [](const auto& kv) { return kv.second == 0; });
  rep_ = std::move(merged);
}

const mpq_class& GroupElement::scalar() const {
  if (!is_scalar()) fail(ErrorKind::TypeMismatch, "expected a scalar element, got " + to_string());
  return std::get<0>(rep_);
}

const GroupElement::Tuple& GroupElement::coords() const {
  if (!is_tuple()) fail(ErrorKind::TypeMismatch, "expected a tuple element, got " + to_string());
  return std::get<1>(rep_);
}

const GroupElement::Support& GroupElement::support() const {
  if (!is_support())
    fail(ErrorKind::TypeMismatch, "expected an index map element, got " + to_string());
  return std::get<2>(rep_);
}

bool GroupElement::is_zero() const {
  switch (rep_.index()) {
    case 0:
      return std::get<0>(rep_) == 0;
    case 1:
      return std::all_of(std::get<1>(rep_).begin(), std::get<1>(rep_).end(),
                         [](const GroupElement& c) { return c.is_zero(); });
    default:
      return std::get<2>(rep_).empty();
  }
}

int GroupElement::sign() const {
  switch (rep_.index()) {
    case 0:
      return sgn(std::get<0>(rep_));
    case 1:
      for (const auto& c : std::get<1>(rep_))
        if (int s = c.sign()) return s;
      return 0;
    default: {
      const auto& s = std::get<2>(rep_);
      return s.empty() ? 0 : sgn(s.rbegin()->second);
    }
  }
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (rep_.index() != other.rep_.index())
    fail(ErrorKind::TypeMismatch, "cannot add " + to_string() + " and " + other.to_string());
  switch (rep_.index()) {
    case 0: {
      // mpq_add keeps the result canonical.
      GroupElement out;
      mpq_add(std::get<0>(out.rep_).get_mpq_t(), std::get<0>(rep_).get_mpq_t(),
              std::get<0>(other.rep_).get_mpq_t());
      return out;
    }
    case 1: {
      const auto& a = std::get<1>(rep_);
      const auto& b = std::get<1>(other.rep_);
      if (a.size() != b.size())
        fail(ErrorKind::TypeMismatch, "tuple length mismatch: " + to_string() + " vs " +
                                          other.to_string());
      Tuple t;
      t.reserve(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) t.push_back(a[i] + b[i]);
      return GroupElement(std::move(t));
    }
    default: {
      const auto& a = std::get<2>(rep_);
      const auto& b = std::get<2>(other.rep_);
      Support s;
      s.reserve(a.size() + b.size());
      auto ia = a.begin(), ib = b.begin();
      while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
          s.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
          s.push_back(*ib++);
        } else {
          mpq_class v = ia->second + ib->second;
          if (v != 0) s.emplace_back(ia->first, std::move(v));
          ++ia, ++ib;
        }
      }
      GroupElement out;
      out.rep_ = std::move(s);
      return out;
    }
  }
}

GroupElement GroupElement::operator-() const {
  switch (rep_.index()) {
    case 0:
      return GroupElement(mpq_class(-std::get<0>(rep_)));
    case 1: {
      Tuple t;
      for (const auto& c : std::get<1>(rep_)) t.push_back(-c);
      return GroupElement(std::move(t));
    }
    default: {
      Support s = std::get<2>(rep_);
      for (auto& kv : s) kv.second = -kv.second;
      GroupElement out;
      out.rep_ = std::move(s);
      return out;
    }
  }
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
  if (rep_.index() == 0 && other.rep_.index() == 0) {
    GroupElement out;
    mpq_sub(std::get<0>(out.rep_).get_mpq_t(), std::get<0>(rep_).get_mpq_t(),
            std::get<0>(other.rep_).get_mpq_t());
    return out;
  }
  if (rep_.index() == 1 && other.rep_.index() == 1 &&
      std::get<1>(rep_).size() == std::get<1>(other.rep_).size()) {
    const auto& a = std::get<1>(rep_);
    const auto& b = std::get<1>(other.rep_);
    Tuple t;
    t.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) t.push_back(a[i] - b[i]);
    return GroupElement(std::move(t));
  }
  return *this + (-other);
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& other) const {
  if (rep_.index() != other.rep_.index())
    fail(ErrorKind::TypeMismatch, "cannot compare " + to_string() + " and " + other.to_string());
  switch (rep_.index()) {
    case 0:
      return order_of(cmp(std::get<0>(rep_), std::get<0>(other.rep_)));
    case 1: {
      const auto& a = std::get<1>(rep_);
      const auto& b = std::get<1>(other.rep_);
      if (a.size() != b.size())
        fail(ErrorKind::TypeMismatch, "tuple length mismatch: " + to_string() + " vs " +
                                          other.to_string());
      for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
      return std::strong_ordering::equal;
    }
    default: {
      const auto& a = std::get<2>(rep_);
      const auto& b = std::get<2>(other.rep_);
      auto ia = a.rbegin();
      auto ib = b.rbegin();
      // Walk down from the most significant index.
      while (ia != a.rend() || ib != b.rend()) {
        if (ib == b.rend() || (ia != a.rend() && ia->first > ib->first))
          return order_of(sgn(ia->second));
        if (ia == a.rend() || ib->first > ia->first) return order_of(-sgn(ib->second));
        if (int c = cmp(ia->second, ib->second)) return order_of(c);
        ++ia;
        ++ib;
      }
      return std::strong_ordering::equal;
    }
  }
}

bool GroupElement::operator==(const GroupElement& other) const {
  return (*this <=> other) == 0;
}

std::string GroupElement::to_string() const {
  switch (rep_.index()) {
    case 0:
      return rational_text(std::get<0>(rep_));
    case 1: {
      std::string s = "(";
      const auto& t = std::get<1>(rep_);
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += t[i].to_string();
      }
      return s + ")";
    }
    default: {
      std::string s = "{";
      bool first = true;
      for (const auto& [idx, v] : std::get<2>(rep_)) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(idx) + ":" + rational_text(v);
      }
      return s + "}";
    }
  }
}

Group::Group(GroupDescriptor desc) : desc_(std::move(desc)) {
  validate(desc_);
  chain_ = chain_of(desc_);
}

GroupHandle build_group(GroupDescriptor desc) {
  return std::make_shared<const Group>(std::move(desc));
}

bool Group::has_families() const {
  return std::any_of(chain_.begin(), chain_.end(), [](const ChainSlot& s) {
    return s.shape == ChainSlot::Shape::OmegaAscending;
  });
}

GroupElement Group::zero() const { return zero_of(desc_); }

bool Group::is_element(const GroupElement& x) const { return element_of(desc_, x); }

void Group::require_element(const GroupElement& x) const {
  if (!is_element(x))
    fail(ErrorKind::TypeMismatch,
         x.to_string() + " is not an element of " + desc_.to_string());
}

std::strong_ordering Group::cmp(const GroupElement& a, const GroupElement& b) const {
  require_element(a);
  require_element(b);
  return a <=> b;
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
  require_element(a);
  require_element(b);
  return a + b;
}

GroupElement Group::neg(const GroupElement& a) const {
  require_element(a);
  return -a;
}

GroupElement Group::sub(const GroupElement& a, const GroupElement& b) const {
  require_element(a);
  require_element(b);
  return a - b;
}

void Group::require_subgroup(SubgroupId h) const {
  const bool ok = h.slot < chain_.size() &&
                  ((chain_[h.slot].shape == ChainSlot::Shape::Single) == (h.member == 0));
  if (!ok) fail(ErrorKind::UnknownSubgroup, "no convex subgroup " + subgroup_name(h) + " in " +
                                                desc_.to_string());
}

Convex Group::subgroup(SubgroupId h) const {
  require_subgroup(h);
  return instantiate(chain_[h.slot].subgroup, h.member);
}

std::string Group::subgroup_name(SubgroupId h) const {
  std::string s = "H" + std::to_string(h.slot);
  if (h.member) s += "_" + std::to_string(h.member);
  return s;
}

bool Group::in_subgroup(const GroupElement& x, SubgroupId h) const {
  require_element(x);
  return contains(desc_, subgroup(h), x);
}

bool Group::has_least_positive_mod(SubgroupId h) const { return has_lp(desc_, subgroup(h)); }

std::optional<GroupElement> Group::least_positive_mod(SubgroupId h) const {
  const Convex c = subgroup(h);
  if (!has_lp(desc_, c)) return std::nullopt;
  return lp(desc_, c);
}

GroupElement Group::reduce_mod(const GroupElement& x, SubgroupId h) const {
  require_element(x);
  return reduce(desc_, subgroup(h), x);
}

std::uint32_t Group::max_index(const GroupElement& x) const { return max_index_of(x); }

GroupElement Group::random_element(std::mt19937_64& rng, int scale) const {
  return random_of(desc_, rng, scale);
}

}  // namespace smashlab
