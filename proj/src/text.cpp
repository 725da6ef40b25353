#include "smashlab/text.hpp"

#include <algorithm>
#include <cctype>

#include "smashlab/error.hpp"

namespace smashlab {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  // Character right after the current one, ignoring whitespace before the first.
  char peek_next() {
    skip_ws();
    return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  void finish() {
    if (!at_end()) error("unexpected trailing text");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    if (start == pos_) error("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  mpz_class natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  mpz_class integer() {
    const bool neg = accept('-');
    if (!neg) accept('+');
    mpz_class v = natural();
    return neg ? mpz_class(-v) : v;
  }

  mpq_class rational() {
    const mpz_class num = integer();
    mpz_class den = 1;
    if (accept('/')) {
      den = natural();
      if (den == 0) error("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::uint32_t small_natural() {
    const mpz_class v = natural();
    if (v > 1000000) error("index too large");
    return static_cast<std::uint32_t>(v.get_ui());
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError,
         "column " + std::to_string(pos_ + 1) + ": " + msg + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

GroupDescriptor descriptor(Cursor& c) {
  const std::string word = lower(c.identifier());
  if (word == "z" || word == "int") return GroupDescriptor::integers();
  if (word == "q" || word == "rat") return GroupDescriptor::rationals();
  if (word == "zloc" || word == "intloc") {
    c.expect('(');
    const mpz_class base = c.integer();
    c.expect(')');
    if (!base.fits_slong_p()) c.error("base out of range");
    return GroupDescriptor::localized(base.get_si());
  }
  if (word == "lex") {
    c.expect('(');
    std::vector<GroupDescriptor> parts;
    if (!c.accept(')')) {
      do parts.push_back(descriptor(c));
      while (c.accept(','));
      c.expect(')');
    }
    return GroupDescriptor::lex(std::move(parts));
  }
  if (word == "antilex_omega" || word == "antilexomega") {
    c.expect('(');
    GroupDescriptor base = descriptor(c);
    c.expect(')');
    return GroupDescriptor::antilex_omega(std::move(base));
  }
  c.error("unknown group constructor '" + word + "'");
}

GroupElement raw_element(Cursor& c) {
  if (c.accept('(')) {
    GroupElement::Tuple t;
    do t.push_back(raw_element(c));
    while (c.accept(','));
    c.expect(')');
    return GroupElement(std::move(t));
  }
  if (c.accept('{')) {
    GroupElement::Support s;
    if (!c.accept('}')) {
      do {
        const std::uint32_t idx = c.small_natural();
        if (idx == 0) c.error("omega indices start at 1");
        c.expect(':');
        mpq_class v = c.rational();
        if (std::any_of(s.begin(), s.end(), [&](const auto& kv) { return kv.first == idx; }))
          c.error("repeated index " + std::to_string(idx));
        s.emplace_back(idx, std::move(v));
      } while (c.accept(','));
      c.expect('}');
    }
    return GroupElement(std::move(s));
  }
  return GroupElement(c.rational());
}

GroupElement element(Cursor& c, const Group& g) {
  GroupElement x = raw_element(c);
  if (x.is_scalar() && x.is_zero()) return g.zero();
  g.require_element(x);
  return x;
}

SubgroupId subgroup_name(Cursor& c, const Group& g) {
  const std::string name = c.identifier();
  if (name.size() < 2 || name[0] != 'H') c.error("expected a subgroup name like H1 or H1_2");
  SubgroupId id;
  const auto us = name.find('_');
  const std::string slot = name.substr(1, us == std::string::npos ? std::string::npos : us - 1);
  const std::string member = us == std::string::npos ? "" : name.substr(us + 1);
  auto digits = [](const std::string& s) {
    return !s.empty() && s.size() < 7 &&
           std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(ch); });
  };
  if (!digits(slot) || (us != std::string::npos && !digits(member)))
    c.error("malformed subgroup name '" + name + "'");
  id.slot = std::stoul(slot);
  if (!member.empty()) id.member = static_cast<std::uint32_t>(std::stoul(member));
  g.require_subgroup(id);
  return id;
}

Cut cut_after(Cursor& c, const GroupHandle& g, const std::string& word) {
  if (word == "zero") return Cut::zero(g);
  if (word == "all") return Cut::all(g);
  if (word == "closed") {
    c.expect('(');
    GroupElement at = element(c, *g);
    c.expect(')');
    return Cut::closed(g, std::move(at));
  }
  if (word == "open" || word == "loccone") {
    c.expect('(');
    GroupElement at = element(c, *g);
    c.expect(',');
    const SubgroupId h = subgroup_name(c, *g);
    c.expect(')');
    return word == "open" ? Cut::open_above(g, std::move(at), h)
                          : Cut::loc_cone(g, std::move(at), h);
  }
  c.error("unknown cut '" + word + "'");
}

Cut cut(Cursor& c, const GroupHandle& g) { return cut_after(c, g, c.identifier()); }

Series series(Cursor& c, const Group& g, std::uint32_t p) {
  std::vector<Series::Term> terms;
  bool first = true;
  while (true) {
    bool negative = false;
    if (c.accept('-'))
      negative = true;
    else if (!c.accept('+') && !first)
      break;
    first = false;
    mpq_class coef = 1;
    const char head = c.peek();
    bool has_monomial = true;
    if (std::isdigit(static_cast<unsigned char>(head))) {
      coef = c.rational();
      has_monomial = c.accept('*');
    }
    GroupElement exponent = g.zero();
    if (has_monomial) {
      if (c.identifier() != "t") c.error("expected the variable t");
      if (c.accept('^')) {
        if (c.accept('{')) {
          exponent = element(c, g);
          c.expect('}');
        } else {
          GroupElement e(mpq_class(c.integer()));
          if (!g.is_element(e)) c.error("bare exponents need a scalar group; use t^{...}");
          exponent = e;
        }
      } else {
        GroupElement one = GroupElement::integer(1);
        if (!g.is_element(one)) c.error("t alone needs a scalar group; use t^{...}");
        exponent = one;
      }
    }
    terms.emplace_back(std::move(exponent), negative ? mpq_class(-coef) : coef);
    const char next = c.peek();
    if (next != '+' && next != '-') break;
  }
  return Series::from_terms(std::move(terms), p);
}

std::pair<Series, Series> fraction(Cursor& c, const Group& g, std::uint32_t p) {
  if (c.accept('(')) {
    Series num = series(c, g, p);
    c.expect(')');
    if (!c.accept('/')) return {num, Series::constant(1, p)};
    c.expect('(');
    Series den = series(c, g, p);
    c.expect(')');
    return {std::move(num), std::move(den)};
  }
  return {series(c, g, p), Series::constant(1, p)};
}

PrimeRef prime_name(Cursor& c, const ValuationSpectrum& spec) {
  return spec.find(c.identifier());
}

StdModule module(Cursor& c, const ValuationSpectrum& spec) {
  const GroupHandle& g = spec.group();
  if (!g) fail(ErrorKind::UnsupportedComponent, "modules need a spectrum built from a group");
  if (c.peek() == '0' && !ident_char(c.peek_next())) {
    c.expect('0');
    return StdModule::zero(g);
  }
  const std::string word = c.identifier();
  if (word == "R") {
    if (!c.accept('/')) return StdModule::ring(g);
    return StdModule::cyclic(cut(c, g));
  }
  if (word == "Q") return StdModule::fraction_field(g);
  if (word == "comp") {
    c.expect('[');
    const PrimeRef lower = prime_name(c, spec);
    c.expect(',');
    const PrimeRef upper = prime_name(c, spec);
    c.expect(']');
    const auto check = validate_chain(spec, IntervalChain{{ChainItem::single(lower, upper)}});
    if (!check.valid) fail(ErrorKind::InvalidChain, check.detail);
    return StdModule::component(spec, {lower, upper});
  }
  if (word != "zero" && word != "all" && word != "closed" && word != "open" &&
      word != "loccone")
    c.error("unknown module '" + word + "'");
  Cut num = cut_after(c, g, word);
  c.expect('/');
  return StdModule(std::move(num), cut(c, g));
}

}  // namespace

GroupDescriptor parse_descriptor(std::string_view text) {
  Cursor c(text);
  GroupDescriptor d = descriptor(c);
  c.finish();
  return d;
}

GroupElement parse_group_element(const Group& g, std::string_view text) {
  Cursor c(text);
  GroupElement x = element(c, g);
  c.finish();
  return x;
}

Cut parse_cut(const GroupHandle& g, std::string_view text) {
  Cursor c(text);
  Cut out = cut(c, g);
  c.finish();
  return out;
}

std::vector<PrimeSlot> parse_flags(std::string_view text) {
  Cursor c(text);
  c.expect('[');
  std::vector<PrimeSlot> slots;
  auto flag = [&]() {
    if (c.accept('-')) return false;
    const std::string w = c.identifier();
    if (w == "i") return true;
    c.error("unknown flag token '" + w + "' (use i or -)");
  };
  do {
    PrimeSlot slot;
    if (c.peek() == '-') {
      slot.idempotent = flag();
    } else {
      const std::string w = c.identifier();
      if (w == "i") {
        slot.idempotent = true;
      } else if (w == "desc" || w == "asc") {
        c.expect('(');
        slot.idempotent = flag();
        c.expect(')');
        slot.shape = w == "desc" ? PrimeSlot::Shape::OmegaDescending
                                 : PrimeSlot::Shape::OmegaAscending;
      } else {
        c.error("unknown flag token '" + w + "' (use i, -, desc(..) or asc(..))");
      }
    }
    slots.push_back(slot);
  } while (c.accept(','));
  c.expect(']');
  c.finish();
  return slots;
}

IntervalChain parse_chain(const ValuationSpectrum& spec, std::string_view text) {
  Cursor c(text);
  IntervalChain chain;
  c.expect('{');
  if (!c.accept('}')) {
    do {
      c.expect('[');
      const std::string lo = c.identifier();
      c.expect(',');
      const std::string up = c.identifier();
      c.expect(']');
      if (c.accept('*')) {
        if (lo != up || lo.size() < 3 || lo.substr(lo.size() - 2) != "_j")
          c.error("family items have the form [f<k>_j,f<k>_j]*");
        const std::string fam = lo.substr(0, lo.size() - 2);
        std::size_t slot = spec.slots().size();
        for (std::size_t s = 0; s < spec.slots().size(); ++s)
          if (spec.slots()[s].name == fam && spec.slots()[s].shape != PrimeSlot::Shape::Single)
            slot = s;
        if (slot == spec.slots().size())
          fail(ErrorKind::UnknownPrime, "unknown prime family '" + fam + "'");
        chain.items.push_back(ChainItem::family(slot));
      } else {
        chain.items.push_back(ChainItem::single(spec.find(lo), spec.find(up)));
      }
    } while (c.accept(','));
    c.expect('}');
  }
  c.finish();
  return chain;
}

Series parse_series(const Group& g, std::string_view text, std::uint32_t p) {
  Cursor c(text);
  Series s = series(c, g, p);
  c.finish();
  return s;
}

RingElement parse_ring_element(const GroupHandle& g, std::string_view text, std::uint32_t p) {
  Cursor c(text);
  auto [num, den] = fraction(c, *g, p);
  c.finish();
  return RingElement(g, std::move(num), std::move(den));
}

FieldElement parse_field_element(const GroupHandle& g, std::string_view text, std::uint32_t p) {
  Cursor c(text);
  auto [num, den] = fraction(c, *g, p);
  c.finish();
  return FieldElement(g, std::move(num), std::move(den));
}

StdModule parse_module(const ValuationSpectrum& spec, std::string_view text) {
  Cursor c(text);
  StdModule m = module(c, spec);
  c.finish();
  return m;
}

FormalComplex parse_complex(const ValuationSpectrum& spec, std::string_view text) {
  Cursor c(text);
  FormalComplex x;
  c.expect('{');
  if (!c.accept('}')) {
    do {
      const mpz_class deg = c.integer();
      if (!deg.fits_sint_p()) c.error("degree out of range");
      c.expect(':');
      StdModule m = module(c, spec);
      if (!x.emplace(static_cast<int>(deg.get_si()), m).second)
        c.error("degree " + deg.get_str() + " given twice");
    } while (c.accept(','));
    c.expect('}');
  }
  c.finish();
  return x;
}

std::vector<RingElement> parse_row(const GroupHandle& g, std::string_view text) {
  std::vector<RingElement> row;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    row.push_back(parse_ring_element(g, text.substr(start, end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return row;
}

std::pair<GroupHandle, ValMatrix> parse_matrix_file(std::string_view text) {
  GroupHandle g;
  std::vector<std::vector<RingElement>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      if (!g) {
        const auto colon = line.find(':');
        if (colon == std::string_view::npos ||
            line.substr(0, colon).find("group") == std::string_view::npos)
          fail(ErrorKind::ParseError, "first line must be 'group: <descriptor>'");
        g = build_group(parse_descriptor(line.substr(colon + 1)));
        continue;
      }
      rows.push_back(parse_row(g, line));
      if (rows.back().size() != rows.front().size())
        fail(ErrorKind::DimensionMismatch, "rows differ in length");
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!g) fail(ErrorKind::ParseError, "missing 'group:' header");
  if (rows.empty()) fail(ErrorKind::ParseError, "matrix has no rows");
  ValMatrix m(g, std::move(rows));
  return {g, std::move(m)};
}

}  // namespace smashlab
