// Acceptance run: one PASS/FAIL line per criterion.  All comparisons are exact
// (no tolerances); random draws use fixed seeds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "smashlab/error.hpp"
#include "smashlab/homology.hpp"
#include "smashlab/mazet.hpp"
#include "smashlab/smashing.hpp"
#include "smashlab/text.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace smashlab;
using namespace smashlab::testing;

namespace {

using D = GroupDescriptor;

// Collects mismatches; a criterion passes when none were recorded.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ < 5) notes_ << "\n    " << what;
  }
  void note(const std::string& text) { extra_ += (extra_.empty() ? "" : ", ") + text; }
  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failed";
    if (!extra_.empty()) s << "; " << extra_;
    s << notes_.str();
    return s.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::ostringstream notes_;
  std::string extra_;
};

std::string seconds_since(std::chrono::steady_clock::time_point start) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return buf;
}

ValuationSpectrum spectrum_of(const D& d) { return ValuationSpectrum::from_group(build_group(d)); }

std::size_t count_flat(const std::vector<IntervalChain>& chains) {
  return static_cast<std::size_t>(
      std::count_if(chains.begin(), chains.end(), [](const auto& c) { return is_flat(c); }));
}

std::string literal_list(const ValuationSpectrum& spec, const std::vector<IntervalChain>& cs) {
  std::string out;
  for (const auto& c : cs) out += (out.empty() ? "" : " ") + chain_text(spec, c);
  return out;
}

// 1 and 4: five chains, the flat ones being {}, {[p0,p0]}, {[p0,p1]}; tc false.
void puiseux_counts(Check& c, const D& d) {
  const auto spec = spectrum_of(d);
  const auto chains = enumerate_smashing(spec);
  c.expect(chains.size() == 5, d.to_string() + ": " + literal_list(spec, chains));
  std::set<std::string> flat;
  for (const auto& ch : chains)
    if (is_flat(ch)) flat.insert(chain_text(spec, ch));
  c.expect(flat == std::set<std::string>{"{}", "{[p0,p0]}", "{[p0,p1]}"},
           d.to_string() + ": wrong flat chains");
  c.expect(!tc_holds(spec), d.to_string() + ": tc should fail");
}

// Brute-force up-sets of a finite chain of primes.  Over a chain every up-set
// is {p_k, ..., p_n} or empty.
std::set<std::set<std::size_t>> upset_oracle(std::size_t n) {
  std::set<std::set<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool up = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if ((mask >> i & 1) && !(mask >> (i + 1) & 1)) up = false;
    if (!up) continue;
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(i);
    out.insert(s);
  }
  return out;
}

std::set<std::size_t> members(const ThomasonSet& t, std::size_t n) {
  std::set<std::size_t> s;
  if (t.least)
    for (std::size_t i = *t.least; i < n; ++i) s.insert(i);
  return s;
}

void dvr(Check& c) {
  const auto spec = spectrum_of(D::integers());
  const auto chains = enumerate_smashing(spec);
  c.expect(chains.size() == 3, "Z: " + literal_list(spec, chains));
  c.expect(count_flat(chains) == chains.size(), "Z: not all flat");
  c.expect(tc_holds(spec), "Z: tc should hold");
  const auto sets = thomason_sets(spec);
  std::set<std::set<std::size_t>> got, from_chains;
  for (const auto& t : sets) got.insert(members(t, spec.size()));
  for (const auto& ch : chains) from_chains.insert(members(chain_to_thomason(spec, ch), spec.size()));
  c.expect(sets.size() == 3 && got == upset_oracle(spec.size()), "Z: up-sets differ from oracle");
  c.expect(from_chains == got, "Z: flat chains do not biject onto up-sets");
}

void rank_two(Check& c) {
  const auto spec = spectrum_of(D::lex({D::integers(), D::integers()}));
  c.expect(spec.size() == 3, "lex(Z,Z): " + spec.to_string());
  const auto chains = enumerate_smashing(spec);
  c.expect(chains.size() == 4, "lex(Z,Z): " + literal_list(spec, chains));
  c.expect(count_flat(chains) == 4, "lex(Z,Z): flat count");
  c.expect(tc_holds(spec), "lex(Z,Z): tc should hold");
  std::set<Intervals> got;
  for (const auto& ch : chains) got.insert(as_pairs(ch));
  c.expect(got == word_oracle({true, false, false}), "lex(Z,Z): oracle mismatch");
}

void noncoherent(Check& c) {
  const auto spec = spectrum_of(D::lex({D::integers(), D::antilex_omega(D::rationals())}));
  const auto& s = spec.slots();
  using Shape = PrimeSlot::Shape;
  c.expect(s.size() == 4 && s[0].idempotent && !s[1].idempotent &&
               s[2].shape == Shape::OmegaDescending && s[2].idempotent && s[3].idempotent,
           "spectrum " + spec.flags_literal());
  const auto ok = validate_chain(spec, parse_chain(spec, "{[p0,p1],[f0_j,f0_j]*}"));
  c.expect(ok.valid, "capped family rejected");
  const auto bad = validate_chain(spec, parse_chain(spec, "{[f0_j,f0_j]*}"));
  c.expect(!bad.valid && bad.kind == ViolationKind::C1, "uncapped family not C1");
  c.expect(!tc_holds(spec), "tc should fail");
}

void enumeration_oracle(Check& c) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      const auto flags = pattern(n, mask);
      const auto spec = ValuationSpectrum::from_flags(flags);
      const auto chains = enumerate_smashing(spec);
      std::set<Intervals> got;
      for (const auto& ch : chains) got.insert(as_pairs(ch));
      const std::string tag = spec.flags_literal();
      c.expect(got.size() == chains.size(), tag + ": duplicates");
      c.expect(got == word_oracle(flags), tag + ": word oracle");
      // The subset route costs 2^(intervals); six primes is out of reach.
      if (n <= 5) c.expect(got == subset_oracle(flags), tag + ": subset oracle");
      c.expect(count_flat(chains) == n + 1, tag + ": flat count");
      c.expect(tc_holds(spec) == (chains.size() == count_flat(chains)), tag + ": tc");
    }
}

void snf_suite(Check& c) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (const auto& d : constructor_groups()) {
    const auto start = std::chrono::steady_clock::now();
    const auto g = build_group(d);
    const auto pool = exponent_pool(*g, 2);
    std::mt19937_64 rng(1009);
    for (int i = 0; i < 1000; ++i) {
      const ValMatrix a = random_matrix(g, pool, rng, size(rng), size(rng), 4);
      const SnfResult r = snf(a);
      const std::string tag = d.to_string() + " #" + std::to_string(i);
      c.expect(snf_identity_holds(r, a), tag + ": U*A*V != D");
      c.expect(is_diagonal(r.D) && divisibility_chain_holds(r.D), tag + ": chain");
      const ValMatrix moved = random_invertible(g, pool, rng, a.rows()) * a *
                              random_invertible(g, pool, rng, a.cols());
      c.expect(snf(moved).diag_values == r.diag_values, tag + ": invariance");
    }
    c.note(d.to_string() + " " + seconds_since(start));
  }
}

void tor_oracle(Check& c) {
  const auto z = build_group(D::integers());
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b) {
      const StdModule ma = StdModule::cyclic(Cut::closed(z, GroupElement::integer(a)));
      const StdModule mb = StdModule::cyclic(Cut::closed(z, GroupElement::integer(b)));
      const CyclicTor r = resolution_tor(z, a, b);
      const std::string tag = std::to_string(a) + "," + std::to_string(b);
      c.expect(cyclic_length(tor0(ma, mb)) == r.tor0, "tor0 " + tag);
      c.expect(cyclic_length(tor1(ma, mb)) == r.tor1, "tor1 " + tag);
    }
  for (const auto& d : constructor_groups()) {
    const auto g = build_group(d);
    std::mt19937_64 rng(2003);
    for (int i = 0; i < 200; ++i) {
      const Cut cut = random_cut(g, rng, true);
      c.expect(idempotent_kernel_test(cut) == is_idempotent(cut), d.to_string() + " " + cut.to_string());
    }
  }
}

void orthogonality(Check& c) {
  // Two or more primes: a single prime is a field, which no value group realizes.
  for (std::size_t n = 2; n <= 4; ++n)
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      const auto flags = pattern(n, mask);
      const auto spec = spectrum_of(realize_flags(flags));
      c.expect(spec == ValuationSpectrum::from_flags(flags), "realization " + spec.flags_literal());
      for (const auto& ch : enumerate_smashing(spec)) {
        const auto comps = classify_chain(spec, ch).components;
        for (std::size_t i = 0; i < comps.size(); ++i)
          for (std::size_t j = i + 1; j < comps.size(); ++j)
            c.expect(interval_orthogonality(spec, comps[i], comps[j]),
                     spec.flags_literal() + " " + chain_text(spec, ch));
      }
    }
}

// N is a module over S = R_p / i for the component [i, p]: both cuts are
// stable under the units of R_p, and i kills N.
bool is_s_module(const ValuationSpectrum& spec, const AdmissibleInterval& iv, const StdModule& n) {
  if (n.is_zero()) return true;
  const GroupHandle& g = spec.group();
  const Cut units = Cut::loc_cone(g, g->zero(), spec.subgroup_of(iv.upper));
  const Cut kernel = prime_cut(g, spec.subgroup_of(iv.lower));
  return minkowski(n.numerator(), units) == n.numerator() &&
         minkowski(n.denominator(), units) == n.denominator() &&
         cut_leq(minkowski(kernel, n.numerator()), n.denominator());
}

void five_term_suite(Check& c) {
  const auto z = build_group(D::integers());
  const auto spec = ValuationSpectrum::from_group(z);
  std::vector<std::pair<std::string, StdModule>> inputs{{"R", StdModule::ring(z)},
                                                        {"Q", StdModule::fraction_field(z)}};
  for (long a = 1; a <= 6; ++a)
    inputs.emplace_back("R/t^" + std::to_string(a),
                        StdModule::cyclic(Cut::closed(z, GroupElement::integer(a))));
  for (const auto& ch : enumerate_smashing(spec)) {
    if (!is_flat(ch)) continue;
    const auto comps = classify_chain(spec, ch).components;
    for (const auto& [name, m] : inputs) {
      const FiveTerm f = five_term(spec, m, ch);
      const std::string tag = name + " over " + chain_text(spec, ch);
      c.expect(in_x0(spec, f.xm_sub, ch) && in_x0(spec, f.xm_quotient, ch), tag + ": X_M not in X0");
      bool m_is_s_module = comps.empty() ? m.is_zero() : true;
      for (const auto& iv : comps) {
        c.expect(is_s_module(spec, iv, f.tensored), tag + ": M (x) S = " + f.tensored.to_string() +
                                                        " is not an S-module");
        c.expect(is_s_module(spec, iv, f.xup),
                 tag + ": X^M = " + f.xup.to_string() + " is not an S-module");
        m_is_s_module = m_is_s_module && is_s_module(spec, iv, m);
      }
      if (m_is_s_module)
        c.expect(f.t1.is_zero() && f.xm_is_zero() && f.kernel.is_zero() && f.xup.is_zero(),
                 tag + ": S-module input has a nonzero flanking module");
    }
  }
}

void mazet_suite(Check& c) {
  std::size_t accepted = 0, rejected = 0;
  std::mt19937_64 rng(3001);
  const std::vector<D> groups{D::integers(), D::localized(2), D::lex({D::integers(), D::integers()})};
  for (std::size_t round = 0; accepted < 200 || rejected < 200; ++round) {
    if (round > 5000) {
      c.expect(false, "too few usable samples");
      break;
    }
    const auto g = build_group(groups[round % groups.size()]);
    const auto spec = ValuationSpectrum::from_group(g);
    const auto primes = spec.primes();
    const PrimeRef target = primes[rng() % primes.size()];
    const auto f = classify_chain(spec, {{ChainItem::single(spec.bottom(), target)}});
    const Cut prime = prime_cut(g, spec.subgroup_of(target));
    const auto pool = exponent_pool(*g, 3);
    const RingElement r = random_ring_element(g, pool, rng, 4, 0.0);
    const RingElement sigma = random_ring_element(g, pool, rng, 2, 0.0);
    if (r.is_zero() || sigma.is_zero() || cut_contains(prime, *sigma.valuation())) continue;
    const auto m = mazet_for_localization(spec, r, sigma, target);
    const std::vector<FieldElement> x{FieldElement(r) / FieldElement(sigma)};
    const std::string tag = g->descriptor().to_string() + " " + r.to_string() + " / " + sigma.to_string();
    if (accepted < 200) {
      c.expect(verify_mazet(spec, f, x, m.P, m.Y, m.Q), "rejected " + tag);
      ++accepted;
    }
    if (rejected < 200) {
      // Scaling Y by t^e (e > 0) turns the presented element into x / t^e.
      const ValMatrix t(g, {{RingElement::monomial(g, pick(pool, rng, true))}});
      bool rejects = false;
      try {
        rejects = !verify_mazet(spec, f, x, m.P, m.Y * t, m.Q);
      } catch (const Error& e) {
        c.expect(false, std::string("perturbed ") + tag + " raised " + e.what());
      }
      c.expect(rejects, "accepted perturbed " + tag);
      ++rejected;
    }
  }
  const auto loc = build_group(D::localized(2));
  const auto spec = ValuationSpectrum::from_group(loc);
  const auto f = classify_chain(spec, parse_chain(spec, "{[p0,p0],[p1,p1]}"));
  const auto runs = locally_constant_decomposition(
      spec, f, {FieldElement(RingElement::zero(loc)), FieldElement(RingElement::one(loc))});
  c.expect(runs.size() == 2, "(0,1) in Q x k gave " + std::to_string(runs.size()) + " runs");
}

void telescope(Check& c) {
  const auto point = ValuationSpectrum::from_flags({true});
  c.expect(tc_holds_family(std::vector<ValuationSpectrum>(8, point)), "regular family");
  for (std::size_t n = 1; n <= 6; ++n)
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      const auto flags = pattern(n, mask);
      const auto spec = ValuationSpectrum::from_flags(flags);
      const bool nonzero_idem = std::find(flags.begin() + 1, flags.end(), true) != flags.end();
      c.expect(tc_holds(spec) == !nonzero_idem, spec.flags_literal());
      c.expect(tc_holds_family({point, spec}) == !nonzero_idem, "family with " + spec.flags_literal());
    }
  for (const char* family : {"asc(i)", "asc(-)"})
    for (const char* sup : {"i", "-"}) {
      const std::string lit = std::string("[i,") + family + "," + sup + "]";
      bool valid = true;
      try {
        ValuationSpectrum::from_slots(parse_flags(lit));
      } catch (const Error& e) {
        valid = false;
        c.expect(e.kind() == ErrorKind::InvalidSpectrum, lit + ": " + e.what());
      }
      c.expect(valid == (std::string(sup) == "i"), lit);
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Puiseux example over Zloc(2)", [](Check& c) { puiseux_counts(c, D::localized(2)); }},
      {"DVR over Z", dvr},
      {"rank-2 discrete lex(Z,Z)", rank_two},
      {"dense rank-1 over Q", [](Check& c) { puiseux_counts(c, D::rationals()); }},
      {"non-coherent example", noncoherent},
      {"enumeration oracle, <= 6 primes", enumeration_oracle},
      {"SNF suite, 1000 matrices per group", snf_suite},
      {"Tor oracle and idempotent kernel", tor_oracle},
      {"orthogonality of enumerated chains", orthogonality},
      {"five-term invariants over Z", five_term_suite},
      {"Mazet presentations", mazet_suite},
      {"telescope corollaries", telescope},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("uncaught: ") + e.what());
    }
    failed += !c.passed();
    std::printf("%s %2zu %s (%s; %s)\n", c.passed() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), seconds_since(start).c_str(), c.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
