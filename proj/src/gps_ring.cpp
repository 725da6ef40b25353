#include "smashlab/gps_ring.hpp"

#include <algorithm>
#include <map>

#include "smashlab/error.hpp"

namespace smashlab {

namespace {

constexpr std::size_t kDivisionStepCap = 200000;

void merge_sorted(std::vector<Series::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Series::Term& a, const Series::Term& b) { return a.first < b.first; });
  std::vector<Series::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  terms = std::move(out);
}

}  // namespace

mpq_class field_inverse(const mpq_class& c, std::uint32_t p) {
  if (c == 0) fail(ErrorKind::DivisionByZero, "inverse of zero coefficient");
  if (p == 0) return 1 / c;
  mpz_class inv;
  mpz_class num = c.get_num() % p;
  if (num < 0) num += p;
  if (!mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mpz_class(p).get_mpz_t()))
    fail(ErrorKind::DivisionByZero, "coefficient not invertible mod " + std::to_string(p));
  return mpq_class(inv);
}

mpq_class Series::reduce(const mpq_class& c) const {
  if (p_ == 0) return c;
  const mpz_class m(p_);
  mpz_class den = c.get_den() % m;
  mpz_class inv;
  if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()))
    fail(ErrorKind::DivisionByZero, "denominator " + c.get_den().get_str() + " vanishes mod " +
                                        std::to_string(p_));
  mpz_class r = (c.get_num() * inv) % m;
  if (r < 0) r += m;
  return mpq_class(r);
}

Series Series::constant(const mpq_class& c, std::uint32_t p) {
  return from_terms({{GroupElement(), c}}, p);
}

Series Series::monomial(GroupElement e, const mpq_class& c, std::uint32_t p) {
  return from_terms({{std::move(e), c}}, p);
}

Series Series::from_terms(std::vector<Term> terms, std::uint32_t p) {
  Series s(p);
  for (auto& t : terms) t.second = s.reduce(t.second);
  merge_sorted(terms);
  for (auto& t : terms) {
    t.second = s.reduce(t.second);
    if (t.second != 0) s.terms_.push_back(std::move(t));
  }
  return s;
}

const GroupElement& Series::min_exponent() const {
  if (terms_.empty()) fail(ErrorKind::DivisionByZero, "zero series has no minimal exponent");
  return terms_.front().first;
}

const GroupElement& Series::max_exponent() const {
  if (terms_.empty()) fail(ErrorKind::DivisionByZero, "zero series has no maximal exponent");
  return terms_.back().first;
}

mpq_class Series::constant_term() const {
  for (const auto& t : terms_)
    if (t.first.is_zero()) return t.second;
  return 0;
}

void Series::check_compatible(const Series& o) const {
  if (p_ != o.p_)
    fail(ErrorKind::TypeMismatch, "coefficients in characteristic " + std::to_string(p_) +
                                      " and " + std::to_string(o.p_));
}

Series Series::operator+(const Series& o) const {
  check_compatible(o);
  Series s(p_);
  s.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      s.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      s.terms_.push_back(*b++);
    } else {
      mpq_class c = reduce(a->second + b->second);
      if (c != 0) s.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return s;
}

Series Series::operator-() const {
  Series s(p_);
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_) s.terms_.emplace_back(t.first, reduce(-t.second));
  return s;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

namespace {

// Sum of two sorted term lists, consuming both.
std::vector<Series::Term> merge_terms(std::vector<Series::Term>&& a, std::vector<Series::Term>&& b,
                                      std::uint32_t p) {
  std::vector<Series::Term> out;
  out.reserve(a.size() + b.size());
  auto x = a.begin(), y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (x->first < y->first) {
      out.push_back(std::move(*x++));
    } else if (y->first < x->first) {
      out.push_back(std::move(*y++));
    } else {
      x->second += y->second;
      // Coefficients mod p are kept in [0, p).
      if (p && x->second >= p) x->second -= p;
      if (x->second != 0) out.push_back(std::move(*x));
      ++x;
      ++y;
    }
  }
  std::move(x, a.end(), std::back_inserter(out));
  std::move(y, b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Series Series::operator*(const Series& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return Series(p_);
  const Series& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Series& large = &small == this ? o : *this;
  // Depth-first halving keeps the live partial sums bounded by the number of
  // distinct exponents instead of materializing every pairwise product.
  auto product = [&](auto&& self, std::size_t lo, std::size_t hi) -> std::vector<Term> {
    if (hi - lo == 1) {
      const auto& [e, c] = small.terms_[lo];
      std::vector<Term> out;
      out.reserve(large.terms_.size());
      for (const auto& t : large.terms_) out.emplace_back(t.first + e, reduce(t.second * c));
      return out;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return merge_terms(self(self, lo, mid), self(self, mid, hi), p_);
  };
  Series s(p_);
  s.terms_ = product(product, 0, small.terms_.size());
  return s;
}

Series Series::scaled(const mpq_class& c) const {
  const mpq_class k = reduce(c);
  Series s(p_);
  if (k == 0) return s;
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_) s.terms_.emplace_back(t.first, reduce(t.second * k));
  return s;
}

Series Series::shifted(const GroupElement& e) const {
  Series s(p_);
  s.terms_.reserve(terms_.size());
  for (const auto& t : terms_) s.terms_.emplace_back(t.first + e, t.second);
  return s;
}

bool Series::operator==(const Series& o) const {
  if (p_ != o.p_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].first == o.terms_[i].first) || terms_[i].second != o.terms_[i].second)
      return false;
  return true;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [e, c] = terms_[i];
    mpq_class mag = abs(c);
    if (i == 0)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (e.is_zero()) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += "t^{" + e.to_string() + "}";
  }
  return s;
}

Series exact_quotient(const Series& n, const Series& d) {
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero series");
  const std::uint32_t p = n.characteristic();
  if (n.is_zero()) return Series(p);
  const GroupElement floor = n.min_exponent() - d.min_exponent();
  const mpq_class lead_inv = field_inverse(d.terms().back().second, p);
  const auto reduce = [p](mpq_class& c) {
    if (!p) return;
    c = mpq_class(mpz_class(c.get_num() * field_inverse(c.get_den(), p)) % p);
    if (c < 0) c += p;
  };
  // Long division from the top exponent down; the remainder lives in a map so
  // each step only touches the terms of d.
  std::map<GroupElement, mpq_class> r;
  for (const auto& t : n.terms()) r.emplace_hint(r.end(), t);
  std::vector<Series::Term> q;
  for (std::size_t step = 0; !r.empty(); ++step) {
    const auto top = std::prev(r.end());
    GroupElement e = top->first - d.max_exponent();
    if (e < floor || step > kDivisionStepCap)
      fail(ErrorKind::NotDivisible, "(" + d.to_string() + ") does not divide (" +
                                        n.to_string() + ")");
    mpq_class c = top->second * lead_inv;
    reduce(c);
    r.erase(top);
    for (std::size_t k = 0; k + 1 < d.terms().size(); ++k) {
      const auto& [x, dc] = d.terms()[k];
      mpq_class sub = c * dc;
      auto [it, inserted] = r.try_emplace(x + e);
      it->second -= sub;
      reduce(it->second);
      if (it->second == 0) r.erase(it);
    }
    q.emplace_back(std::move(e), std::move(c));
  }
  return Series::from_terms(std::move(q), p);
}

std::string valuation_text(const Valuation& v) { return v ? v->to_string() : "inf"; }

namespace {

// Series::constant carries a scalar zero exponent; swap in the group's own zero.
Series conform(const Group& g, Series s) {
  const GroupElement zero = g.zero();
  if (zero.is_scalar()) return s;
  std::vector<Series::Term> terms = s.terms();
  bool changed = false;
  for (auto& t : terms)
    if (t.first.is_scalar() && t.first.is_zero()) {
      t.first = zero;
      changed = true;
    }
  return changed ? Series::from_terms(std::move(terms), s.characteristic()) : s;
}

bool is_one(const Series& s) {
  return s.terms().size() == 1 && s.terms()[0].first.is_zero() && s.terms()[0].second == 1;
}

}  // namespace

RingElement::RingElement(GroupHandle g, Series num)
    : RingElement(std::move(g), num, Series::constant(1, num.characteristic())) {}

RingElement::RingElement(GroupHandle g, Series num, Series den)
    : group_(std::move(g)), num_(conform(*group_, std::move(num))),
      den_(conform(*group_, std::move(den))) {
  if (num_.characteristic() != den_.characteristic())
    fail(ErrorKind::TypeMismatch, "numerator and denominator over different fields");
  for (const auto& t : num_.terms()) group_->require_element(t.first);
  for (const auto& t : den_.terms()) group_->require_element(t.first);
  if (!num_.is_zero() && num_.min_exponent().sign() < 0)
    fail(ErrorKind::NotDivisible, "(" + num_.to_string() + ") has negative value, not in R");
  if (den_.is_zero() || den_.min_exponent().sign() != 0)
    fail(ErrorKind::DenominatorNotUnit,
         "denominator (" + den_.to_string() + ") has no nonzero constant term");
  const mpq_class c = den_.constant_term();
  if (c != 1) {
    const mpq_class inv = field_inverse(c, den_.characteristic());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RingElement RingElement::zero(GroupHandle g, std::uint32_t p) {
  return RingElement(std::move(g), Series(p), Series::constant(1, p));
}

RingElement RingElement::one(GroupHandle g, std::uint32_t p) {
  return RingElement(std::move(g), Series::constant(1, p), Series::constant(1, p));
}

RingElement RingElement::monomial(GroupHandle g, GroupElement e, const mpq_class& c,
                                  std::uint32_t p) {
  return RingElement(std::move(g), Series::monomial(std::move(e), c, p), Series::constant(1, p));
}

Valuation RingElement::valuation() const {
  if (is_zero()) return std::nullopt;
  return num_.min_exponent();
}

void RingElement::check_compatible(const RingElement& o) const {
  if (group_ != o.group_ && !(group_->descriptor() == o.group_->descriptor()))
    fail(ErrorKind::GroupMismatch, "elements over " + group_->descriptor().to_string() + " and " +
                                       o.group_->descriptor().to_string());
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_compatible(o);
  if (den_ == o.den_) return RingElement(group_, num_ + o.num_, den_);
  return RingElement(group_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RingElement RingElement::operator-() const { return RingElement(group_, -num_, den_); }

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return zero(group_, characteristic());
  return RingElement(group_, num_ * o.num_, den_ * o.den_);
}

bool RingElement::operator==(const RingElement& o) const {
  check_compatible(o);
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

std::string RingElement::to_string() const {
  if (is_one(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool divides(const RingElement& a, const RingElement& b) {
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  return *a.valuation() <= *b.valuation();
}

RingElement divide_exact(const RingElement& b, const RingElement& a) {
  if (a.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (!divides(a, b))
    fail(ErrorKind::NotDivisible, a.to_string() + " does not divide " + b.to_string());
  if (b.is_zero()) return RingElement::zero(b.group(), b.characteristic());
  const GroupElement v = *a.valuation();
  const GroupElement back = -v;
  return RingElement(b.group(), b.num().shifted(back) * a.den(),
                     b.den() * a.num().shifted(back));
}

FieldElement::FieldElement(GroupHandle g, Series num, Series den)
    : group_(std::move(g)), num_(conform(*group_, std::move(num))),
      den_(conform(*group_, std::move(den))) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  for (const auto& t : num_.terms()) group_->require_element(t.first);
  for (const auto& t : den_.terms()) group_->require_element(t.first);
  const GroupElement back = -den_.min_exponent();
  const mpq_class inv = field_inverse(den_.terms().front().second, den_.characteristic());
  num_ = num_.shifted(back).scaled(inv);
  den_ = den_.shifted(back).scaled(inv);
}

FieldElement::FieldElement(const RingElement& r) : FieldElement(r.group(), r.num(), r.den()) {}

Valuation FieldElement::valuation() const {
  if (is_zero()) return std::nullopt;
  return num_.min_exponent() - den_.min_exponent();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (den_ == o.den_) return FieldElement(group_, num_ + o.num_, den_);
  return FieldElement(group_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-() const { return FieldElement(group_, -num_, den_); }

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return FieldElement(group_, num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  return FieldElement(group_, num_ * o.den_, den_ * o.num_);
}

bool FieldElement::operator==(const FieldElement& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string FieldElement::to_string() const {
  if (is_one(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ValMatrix::ValMatrix(GroupHandle g, std::size_t rows, std::size_t cols, std::uint32_t p)
    : group_(g), rows_(rows), cols_(cols), p_(p),
      data_(rows * cols, RingElement::zero(g, p)) {}

ValMatrix::ValMatrix(GroupHandle g, std::vector<std::vector<RingElement>> rows)
    : group_(g), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()), p_(0) {
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix rows differ in length");
    for (const auto& x : r) {
      if (x.group() != g && !(x.group()->descriptor() == g->descriptor()))
        fail(ErrorKind::GroupMismatch, "matrix entry over " +
                                           x.group()->descriptor().to_string());
      p_ = x.characteristic();
      data_.push_back(x);
    }
  }
}

ValMatrix ValMatrix::identity(GroupHandle g, std::size_t n, std::uint32_t p) {
  ValMatrix m(g, n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElement::one(g, p);
  return m;
}

ValMatrix ValMatrix::operator*(const ValMatrix& o) const {
  if (cols_ != o.rows_)
    fail(ErrorKind::DimensionMismatch, std::to_string(rows_) + "x" + std::to_string(cols_) +
                                           " times " + std::to_string(o.rows_) + "x" +
                                           std::to_string(o.cols_));
  ValMatrix out(group_, rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      // Sum products sharing a denominator first; cross-multiplying distinct
      // denominators is what makes the result grow.
      std::vector<RingElement> parts;
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        RingElement x = at(i, k) * o.at(k, j);
        auto same = std::find_if(parts.begin(), parts.end(),
                                 [&](const RingElement& q) { return q.den() == x.den(); });
        if (same == parts.end())
          parts.push_back(std::move(x));
        else
          *same = *same + x;
      }
      RingElement acc = RingElement::zero(group_, p_);
      for (const auto& q : parts) acc = acc + q;
      out.at(i, j) = acc;
    }
  return out;
}

bool ValMatrix::operator==(const ValMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

std::string ValMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += "; ";
      s += at(i, j).to_string();
    }
    s += "\n";
  }
  return s;
}

SnfResult snf(const ValMatrix& a) {
  const GroupHandle& g = a.group();
  const std::uint32_t p = a.characteristic();
  const std::size_t m = a.rows(), n = a.cols();
  const Series one = Series::monomial(g->zero(), 1, p);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const GroupHandle& h = a.at(i, j).group();
      if (h != g && !(h->descriptor() == g->descriptor()))
        fail(ErrorKind::GroupMismatch, "matrix over " + g->descriptor().to_string() +
                                           " has an entry over " + h->descriptor().to_string());
    }

  // Clear denominators row by row: multiply row i by the product of its
  // distinct denominators, a unit.
  std::vector<std::vector<Series>> w(m, std::vector<Series>(n, Series(p)));
  std::vector<std::vector<Series>> u(m, std::vector<Series>(m, Series(p)));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Series> dens;
    std::vector<std::size_t> which(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Series& d = a.at(i, j).den();
      auto it = std::find(dens.begin(), dens.end(), d);
      which[j] = static_cast<std::size_t>(it - dens.begin());
      if (it == dens.end()) dens.push_back(d);
    }
    Series row_scale = one;
    for (const auto& d : dens) row_scale = row_scale * d;
    for (std::size_t j = 0; j < n; ++j) {
      Series cofactor = one;
      for (std::size_t k = 0; k < dens.size(); ++k)
        if (k != which[j]) cofactor = cofactor * dens[k];
      w[i][j] = a.at(i, j).num() * cofactor;
    }
    u[i][i] = row_scale;
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = j;

  // Fraction-free row elimination: pivot t^e * unit, row step
  //   R_i <- (unit * R_i - (a_ik / t^e) * R_k) / previous_unit
  // where the division is exact by Sylvester's identity.  Column operations
  // only touch the pivot row and never change a valuation, so they are
  // deferred and the pivot sequence is the same as with interleaved clearing.
  Series prev = one;
  std::vector<GroupElement> pivot_value;
  std::vector<Series> pivot_unit;
  const std::size_t r_max = std::min(m, n);
  for (std::size_t k = 0; k < r_max; ++k) {
    std::size_t pr = m, pc = n;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (w[i][j].is_zero()) continue;
        if (pr == m || w[i][j].min_exponent() < w[pr][pc].min_exponent()) {
          pr = i;
          pc = j;
        }
      }
    if (pr == m) break;
    std::swap(w[k], w[pr]);
    std::swap(u[k], u[pr]);
    if (pc != k) {
      for (std::size_t i = 0; i < m; ++i) std::swap(w[i][k], w[i][pc]);
      std::swap(perm[k], perm[pc]);
    }
    const GroupElement back = -w[k][k].min_exponent();
    const Series unit = w[k][k].shifted(back);
    const bool trivial_prev = prev == one;
    auto step = [&](Series& x, const Series& s, const Series& top) {
      Series y = unit * x - s * top;
      x = trivial_prev ? std::move(y) : exact_quotient(y, prev);
    };
    for (std::size_t i = k + 1; i < m; ++i) {
      const Series s = w[i][k].shifted(back);
      for (std::size_t j = k; j < n; ++j) step(w[i][j], s, w[k][j]);
      for (std::size_t j = 0; j < m; ++j) step(u[i][j], s, u[k][j]);
    }
    pivot_value.push_back(-back);
    pivot_unit.push_back(unit);
    prev = unit;
  }
  const std::size_t r = pivot_unit.size();

  // W = D * N with N unit upper triangular, N_kj = W_kj / W_kk, so that
  // U * A * perm * N^{-1} = D.  By Cramer, column j of N^{-1} has the leading
  // j x j minor as common denominator, i.e. the unit of pivot j - 1.  Back
  // substitution on numerators over that denominator is exact.
  std::vector<std::vector<Series>> y(n, std::vector<Series>(n, Series(p)));
  std::vector<Series> col_den(n, one);
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0 && r > 0) col_den[j] = pivot_unit[std::min(j, r) - 1];
    y[j][j] = col_den[j];
    for (std::size_t k = std::min(j, r); k-- > 0;) {
      Series acc(p);
      for (std::size_t l = k + 1; l <= j; ++l)
        if (!w[k][l].is_zero() && !y[l][j].is_zero()) acc = acc + w[k][l].shifted(-pivot_value[k]) * y[l][j];
      if (!acc.is_zero()) y[k][j] = -exact_quotient(acc, pivot_unit[k]);
    }
  }

  ValMatrix um(g, m, m, p), dm(g, m, n, p), vm(g, n, n, p);
  SnfResult out{um, dm, vm, {}};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.U.at(i, j) = RingElement(g, u[i][j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.V.at(perm[i], j) = RingElement(g, y[i][j], col_den[j]);
  for (std::size_t k = 0; k < r_max; ++k) {
    out.D.at(k, k) = RingElement(g, w[k][k]);
    out.diag_values.push_back(out.D.at(k, k).valuation());
  }
  return out;
}

std::vector<CyclicSummand> decompose_fp_module(const ValMatrix& a) {
  const SnfResult s = snf(a);
  std::vector<CyclicSummand> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i >= a.cols()) {
      out.push_back({std::nullopt});
      continue;
    }
    const Valuation& v = s.diag_values[i];
    if (v && v->is_zero()) continue;
    out.push_back({v});
  }
  return out;
}

std::string summand_text(const CyclicSummand& s) {
  if (s.free()) return "R";
  return "R/t^{" + s.value->to_string() + "}R";
}

}  // namespace smashlab
