#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "smashlab/ordered_group.hpp"

namespace smashlab {

// Finite sums c * t^e with exponents in the value group, kept sorted by
// exponent with no zero coefficients.  A nonzero characteristic p reduces
// coefficients into [0, p).
class Series {
 public:
  using Term = std::pair<GroupElement, mpq_class>;

  Series() = default;
  explicit Series(std::uint32_t characteristic) : p_(characteristic) {}
  // The exponent is a scalar zero; ring and field elements conform it to the group.
  static Series constant(const mpq_class& c, std::uint32_t p = 0);
  static Series monomial(GroupElement e, const mpq_class& c, std::uint32_t p = 0);
  static Series from_terms(std::vector<Term> terms, std::uint32_t p = 0);

  const std::vector<Term>& terms() const { return terms_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  const GroupElement& min_exponent() const;
  const GroupElement& max_exponent() const;
  mpq_class constant_term() const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series scaled(const mpq_class& c) const;
  Series shifted(const GroupElement& e) const;

  bool operator==(const Series& o) const;

  std::string to_string() const;

 private:
  mpq_class reduce(const mpq_class& c) const;
  void check_compatible(const Series& o) const;

  std::vector<Term> terms_;
  std::uint32_t p_ = 0;
};

// Exact quotient n / d; throws NotDivisible if d does not divide n with a
// finite quotient.
Series exact_quotient(const Series& n, const Series& d);

mpq_class field_inverse(const mpq_class& c, std::uint32_t p);

using Valuation = std::optional<GroupElement>;  // nullopt is +infinity
std::string valuation_text(const Valuation& v);

// num / den with num supported on values >= 0 and den carrying a nonzero
// constant term, i.e. den is a unit of the ring.  den is scaled to constant term 1.
class RingElement {
 public:
  RingElement(GroupHandle g, Series num, Series den);
  RingElement(GroupHandle g, Series num);

  static RingElement zero(GroupHandle g, std::uint32_t p = 0);
  static RingElement one(GroupHandle g, std::uint32_t p = 0);
  static RingElement monomial(GroupHandle g, GroupElement e, const mpq_class& c = 1,
                              std::uint32_t p = 0);

  const GroupHandle& group() const { return group_; }
  const Series& num() const { return num_; }
  const Series& den() const { return den_; }
  std::uint32_t characteristic() const { return num_.characteristic(); }

  bool is_zero() const { return num_.is_zero(); }
  Valuation valuation() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  bool operator==(const RingElement& o) const;

  std::string to_string() const;

 private:
  void check_compatible(const RingElement& o) const;

  GroupHandle group_;
  Series num_;
  Series den_;
};

bool divides(const RingElement& a, const RingElement& b);
// b / a as a ring element.
RingElement divide_exact(const RingElement& b, const RingElement& a);

// Element of the fraction field: num / den with den != 0, no support restriction.
class FieldElement {
 public:
  FieldElement(GroupHandle g, Series num, Series den);
  explicit FieldElement(const RingElement& r);

  const GroupHandle& group() const { return group_; }
  const Series& num() const { return num_; }
  const Series& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  Valuation valuation() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  bool operator==(const FieldElement& o) const;

  std::string to_string() const;

 private:
  GroupHandle group_;
  Series num_;
  Series den_;
};

class ValMatrix {
 public:
  ValMatrix(GroupHandle g, std::size_t rows, std::size_t cols, std::uint32_t p = 0);
  ValMatrix(GroupHandle g, std::vector<std::vector<RingElement>> rows);
  static ValMatrix identity(GroupHandle g, std::size_t n, std::uint32_t p = 0);

  const GroupHandle& group() const { return group_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t characteristic() const { return p_; }

  RingElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RingElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ValMatrix operator*(const ValMatrix& o) const;
  bool operator==(const ValMatrix& o) const;

  std::string to_string() const;

 private:
  GroupHandle group_;
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<RingElement> data_;
};

struct SnfResult {
  ValMatrix U, D, V;
  std::vector<Valuation> diag_values;
};

// U * A * V = D with U, V invertible and D diagonal with a divisibility chain.
SnfResult snf(const ValMatrix& a);

// One cyclic summand R / dR; free summands have d = 0 (infinite valuation).
struct CyclicSummand {
  Valuation value;

  bool free() const { return !value.has_value(); }
  bool operator==(const CyclicSummand&) const = default;
};

// Module presented by a (rows = generators, columns = relations).  Unit
// summands are dropped.
std::vector<CyclicSummand> decompose_fp_module(const ValMatrix& a);
std::string summand_text(const CyclicSummand& s);

}  // namespace smashlab
