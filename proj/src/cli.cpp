#include "smashlab/cli.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "smashlab/error.hpp"
#include "smashlab/homology.hpp"
#include "smashlab/mazet.hpp"
#include "smashlab/text.hpp"

namespace smashlab::cli {

using nlohmann::json;

int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return 0;
    case Status::ValidationFailure: return 1;
    case Status::ParseFailure: return 2;
  }
  return 2;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::ValidationFailure: return "validation_failure";
    case Status::ParseFailure: return "parse_failure";
  }
  return "unknown";
}

namespace {

[[noreturn]] void syntax(std::size_t line, std::size_t column, const std::string& msg) {
  fail(ErrorKind::ParseError,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::vector<Arg> tokenize(std::string_view text, std::size_t line) {
  std::vector<Arg> out;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] == '#') break;
    Arg a;
    a.column = i + 1;
    if (text[i] == '"') {
      a.quoted = true;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        const char c = text[i++];
        if (c == '"') {
          closed = true;
          break;
        }
        if (c == '\\' && i < text.size()) {
          a.text += text[i++];
          continue;
        }
        a.text += c;
      }
      if (!closed) syntax(line, a.column, "unterminated string");
    } else {
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '"')
        a.text += text[i++];
    }
    out.push_back(std::move(a));
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// Re-raise a literal's ParseError with the statement's line and column.
template <class F>
auto literal(std::size_t line, std::size_t column, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    const std::string msg = e.what();
    const std::string tag = "column ";
    if (msg.rfind(tag, 0) == 0) {
      const auto colon = msg.find(':');
      const std::size_t inner = std::stoul(msg.substr(tag.size(), colon - tag.size()));
      syntax(line, column + inner - 1, msg.substr(colon + 2));
    }
    syntax(line, column, msg);
  }
}

Statement parse_statement(std::string_view text, std::size_t line) {
  std::vector<Arg> toks = tokenize(text, line);
  Statement st;
  st.line = line;
  st.source = std::string(text);
  std::size_t end = text.size();
  if (!toks.empty() && !toks.back().quoted && toks.back().text == "--json") {
    st.json = true;
    end = toks.back().column - 1;
    toks.pop_back();
  }
  if (toks.empty()) syntax(line, 1, "empty statement");
  if (toks[0].quoted) syntax(line, toks[0].column, "expected a command");
  const std::string verb = toks[0].text;

  auto need = [&](std::size_t k, const char* what) -> const Arg& {
    if (toks.size() <= k) syntax(line, end + 1, std::string("expected ") + what);
    return toks[k];
  };
  auto name_at = [&](std::size_t k) {
    const Arg& a = need(k, "a name");
    if (a.quoted || !valid_name(a.text)) syntax(line, a.column, "invalid name '" + a.text + "'");
    return a.text;
  };
  auto word_at = [&](std::size_t k, const char* w) {
    const Arg& a = need(k, (std::string("'") + w + "'").c_str());
    if (a.quoted || a.text != w) syntax(line, a.column, std::string("expected '") + w + "'");
  };
  auto arity = [&](std::size_t n) {
    if (toks.size() > n) syntax(line, toks[n].column, "unexpected argument '" + toks[n].text + "'");
    need(n - 1, "more arguments");
  };
  auto rest_from = [&](std::size_t k) {
    const Arg& a = need(k, "a literal");
    return std::string(text.substr(a.column - 1, end - (a.column - 1)));
  };
  auto take_args = [&](std::size_t from) {
    st.args.assign(toks.begin() + static_cast<std::ptrdiff_t>(from), toks.end());
  };

  if (verb == "group") {
    st.command = "group";
    st.name = name_at(1);
    word_at(2, "=");
    const std::size_t col = need(3, "a group descriptor").column;
    const std::string lit = rest_from(3);
    st.descriptor = literal(line, col, [&] { return parse_descriptor(lit); });
  } else if (verb == "spec") {
    if (need(1, "a name or 'show'").text == "show" && !toks[1].quoted) {
      st.command = "spec show";
      name_at(2);
      arity(3);
      take_args(2);
    } else {
      st.command = "spec";
      st.name = name_at(1);
      word_at(2, "=");
      const Arg& how = need(3, "'from' or 'chain'");
      if (!how.quoted && how.text == "from") {
        std::size_t k = 4;
        if (toks.size() > 5 && toks[4].text == "group" && !toks[4].quoted) k = 5;
        name_at(k);
        arity(k + 1);
        take_args(k);
      } else if (!how.quoted && how.text == "chain") {
        const std::size_t col = need(4, "a flag list").column;
        const std::string lit = rest_from(4);
        st.flags = literal(line, col, [&] { return parse_flags(lit); });
      } else {
        syntax(line, how.column, "expected 'from' or 'chain'");
      }
    }
  } else if (verb == "element" || verb == "chain") {
    st.command = verb;
    st.name = name_at(1);
    word_at(2, "=");
    name_at(3);
    arity(5);
    take_args(3);
  } else if (verb == "matrix") {
    st.command = verb;
    st.name = name_at(1);
    word_at(2, "=");
    arity(4);
    take_args(3);
  } else if (verb == "smashing") {
    const Arg& sub = need(1, "enumerate, validate or classify");
    if (sub.text == "enumerate") {
      name_at(2);
      arity(3);
    } else if (sub.text == "validate" || sub.text == "classify") {
      name_at(2);
      arity(4);
    } else {
      syntax(line, sub.column, "expected enumerate, validate or classify");
    }
    st.command = "smashing " + sub.text;
    take_args(2);
  } else if (verb == "tc") {
    st.command = verb;
    name_at(1);
    for (std::size_t k = 2; k < toks.size(); ++k) name_at(k);
    take_args(1);
  } else if (verb == "thomason") {
    st.command = verb;
    name_at(1);
    arity(2);
    take_args(1);
  } else if (verb == "tor" || verb == "fiveterm" || verb == "member") {
    st.command = verb;
    name_at(1);
    arity(4);
    take_args(1);
  } else if (verb == "snf" || verb == "decompose") {
    st.command = verb;
    arity(2);
    take_args(1);
  } else if (verb == "mazet") {
    word_at(1, "verify");
    st.command = "mazet verify";
    arity(3);
    take_args(2);
  } else {
    syntax(line, toks[0].column, "unknown command '" + verb + "'");
  }
  return st;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(sep, start);
    out.push_back(trim(s.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

const char* shape_name(PrimeSlot::Shape s) {
  switch (s) {
    case PrimeSlot::Shape::Single: return "single";
    case PrimeSlot::Shape::OmegaDescending: return "descending";
    case PrimeSlot::Shape::OmegaAscending: return "ascending";
  }
  return "single";
}

json spectrum_json(const std::string& name, const ValuationSpectrum& spec) {
  json primes = json::array();
  for (const auto& s : spec.slots())
    primes.push_back({{"name", s.name}, {"idempotent", s.idempotent}, {"shape", shape_name(s.shape)}});
  return {{"name", name},
          {"flags", spec.flags_literal()},
          {"finite", spec.is_finite()},
          {"primes", primes},
          {"chain", spec.to_string()}};
}

json matrix_json(const ValMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

void push_matrix(std::vector<std::string>& lines, const std::string& label, const ValMatrix& m) {
  lines.push_back(label + ":");
  std::istringstream in(m.to_string());
  for (std::string l; std::getline(in, l);) lines.push_back("  " + l);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

ValMatrix matrix_rows(const GroupHandle& g, const std::string& text) {
  std::vector<std::vector<RingElement>> rows;
  for (const auto& r : split(text, '|')) rows.push_back(parse_row(g, r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      fail(ErrorKind::DimensionMismatch, "matrix rows differ in length");
  return ValMatrix(g, std::move(rows));
}

}  // namespace

std::vector<Statement> parse_script(std::string_view text) {
  std::vector<Statement> out;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    start = end + 1;
    ++line;
    const auto first = l.find_first_not_of(" \t");
    if (first == std::string_view::npos || l[first] == '#') continue;
    out.push_back(parse_statement(l, line));
  }
  return out;
}

void Session::bind(const std::string& name, Binding value) {
  if (!bindings_.emplace(name, std::move(value)).second)
    fail(ErrorKind::NameInUse, "'" + name + "' is already bound");
}

const Binding& Session::lookup(const std::string& name) const {
  const auto it = bindings_.find(name);
  if (it == bindings_.end()) fail(ErrorKind::UnboundName, "'" + name + "' is not bound");
  return it->second;
}

GroupHandle Session::group(const std::string& name) const {
  const auto* g = std::get_if<GroupHandle>(&lookup(name));
  if (!g) fail(ErrorKind::TypeMismatch, "'" + name + "' is not a group");
  return *g;
}

const ValuationSpectrum& Session::spectrum(const std::string& name) const {
  const auto* s = std::get_if<ValuationSpectrum>(&lookup(name));
  if (!s) fail(ErrorKind::TypeMismatch, "'" + name + "' is not a spectrum");
  return *s;
}

IntervalChain Session::chain_arg(const ValuationSpectrum& spec, const Arg& arg) const {
  if (!arg.quoted && bindings_.count(arg.text)) {
    const auto* c = std::get_if<IntervalChain>(&bindings_.at(arg.text));
    if (!c) fail(ErrorKind::TypeMismatch, "'" + arg.text + "' is not a chain");
    return *c;
  }
  return parse_chain(spec, arg.text);
}

std::string Session::read_file(const std::string& path) const {
  std::filesystem::path p(path);
  if (p.is_relative() && !base_dir_.empty() && !std::filesystem::exists(p)) p = base_dir_ / p;
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CommandResult Session::execute(const Statement& st) {
  try {
    return dispatch(st);
  } catch (const Error& e) {
    CommandResult r;
    r.command = st.command;
    r.status = e.kind() == ErrorKind::ParseError ? Status::ParseFailure : Status::ValidationFailure;
    const std::string kind(error_kind_name(e.kind()));
    r.data = {{"error", kind}, {"message", e.what()}, {"line", st.line}};
    r.lines.push_back("line " + std::to_string(st.line) + ": " + kind + ": " + e.what());
    return r;
  }
}

CommandResult Session::dispatch(const Statement& st) {
  CommandResult r;
  r.command = st.command;
  const auto& a = st.args;
  auto& lines = r.lines;

  if (st.command == "group") {
    GroupHandle g = build_group(*st.descriptor);
    json chain = json::array();
    for (std::size_t k = 0; k < g->convex_chain().size(); ++k) {
      const bool family = g->convex_chain()[k].shape == ChainSlot::Shape::OmegaAscending;
      chain.push_back(family ? g->subgroup_name({k, 0}) + "_n" : g->subgroup_name({k, 0}));
    }
    r.data = {{"name", st.name}, {"descriptor", g->descriptor().to_string()},
              {"subgroups", chain}};
    lines.push_back(st.name + " = " + g->descriptor().to_string());
    bind(st.name, std::move(g));
  } else if (st.command == "spec" || st.command == "spec show") {
    const bool show = st.command == "spec show";
    const std::string& name = show ? a[0].text : st.name;
    ValuationSpectrum spec = show ? spectrum(name)
                             : st.flags ? ValuationSpectrum::from_slots(*st.flags)
                                        : ValuationSpectrum::from_group(group(a[0].text));
    r.data = spectrum_json(name, spec);
    lines.push_back(name + ": " + spec.to_string());
    lines.push_back("flags: " + spec.flags_literal());
    if (!show) bind(name, std::move(spec));
  } else if (st.command == "element") {
    const GroupHandle g = group(a[0].text);
    RingElement x = parse_ring_element(g, a[1].text);
    r.data = {{"name", st.name}, {"value", x.to_string()},
              {"valuation", valuation_text(x.valuation())}};
    lines.push_back(st.name + " = " + x.to_string() + "  (valuation " +
                    valuation_text(x.valuation()) + ")");
    bind(st.name, std::move(x));
  } else if (st.command == "matrix") {
    auto [g, m] = parse_matrix_file(read_file(a[0].text));
    r.data = {{"name", st.name}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", matrix_json(m)}};
    lines.push_back(st.name + ": " + std::to_string(m.rows()) + " x " + std::to_string(m.cols()) +
                    " over " + g->descriptor().to_string());
    bind(st.name, std::move(m));
  } else if (st.command == "chain") {
    const ValuationSpectrum& spec = spectrum(a[0].text);
    IntervalChain c = parse_chain(spec, a[1].text);
    const auto v = validate_chain(spec, c);
    if (!v.valid) fail(ErrorKind::InvalidChain, violation_name(v.kind) + ": " + v.detail);
    c = sorted_chain(spec, c);
    r.data = {{"name", st.name}, {"chain", chain_text(spec, c)}};
    lines.push_back(st.name + " = " + chain_text(spec, c));
    bind(st.name, std::move(c));
  } else if (st.command == "smashing enumerate") {
    const ValuationSpectrum& spec = spectrum(a[0].text);
    const auto chains = enumerate_smashing(spec);
    json arr = json::array();
    std::size_t flat = 0;
    for (const auto& c : chains) {
      const bool f = is_flat(c);
      flat += f;
      arr.push_back({{"chain", chain_text(spec, c)}, {"flat", f}});
      lines.push_back(chain_text(spec, c) + (f ? "  flat" : ""));
    }
    r.data = {{"count", chains.size()}, {"flat_count", flat}, {"chains", arr}};
    lines.push_back(std::to_string(chains.size()) + " smashing, " + std::to_string(flat) + " flat");
  } else if (st.command == "smashing validate") {
    const ValuationSpectrum& spec = spectrum(a[0].text);
    const IntervalChain c = chain_arg(spec, a[1]);
    const auto v = validate_chain(spec, c);
    if (v.valid) {
      r.data = {{"valid", true}};
      lines.push_back("valid");
    } else {
      r.status = Status::ValidationFailure;
      r.data = {{"valid", false}, {"violation", violation_name(v.kind)}, {"detail", v.detail}};
      lines.push_back("invalid: " + violation_name(v.kind) + ": " + v.detail);
    }
  } else if (st.command == "smashing classify") {
    const ValuationSpectrum& spec = spectrum(a[0].text);
    const HomEpiDescriptor d = classify_chain(spec, chain_arg(spec, a[1]));
    json comps = json::array();
    for (const auto& iv : d.components)
      comps.push_back({{"interval", "[" + spec.name(iv.lower) + "," + spec.name(iv.upper) + "]"},
                       {"ring", component_ring(spec, iv)}});
    const std::string kernel = d.kernel ? spec.name(*d.kernel) : "R";
    r.data = {{"chain", chain_text(spec, d.chain)},
              {"ring", d.ring},
              {"finite", d.finite},
              {"components", comps},
              {"kernel", kernel},
              {"flat", d.is_flat},
              {"compactly_generated", d.is_compactly_generated},
              {"universal_localization", d.is_universal_localization}};
    lines.push_back("R -> " + d.ring);
    lines.push_back("kernel: " + kernel);
    lines.push_back("flat: " + bool_text(d.is_flat) +
                    ", compactly generated: " + bool_text(d.is_compactly_generated) +
                    ", universal localization: " + bool_text(d.is_universal_localization));
  } else if (st.command == "tc") {
    std::vector<ValuationSpectrum> specs;
    json each = json::array();
    for (const auto& arg : a) {
      specs.push_back(spectrum(arg.text));
      each.push_back({{"spec", arg.text}, {"holds", tc_holds(specs.back())}});
    }
    const bool holds = tc_holds_family(specs);
    r.data = {{"holds", holds}, {"specs", each}};
    lines.push_back(bool_text(holds));
  } else if (st.command == "thomason") {
    const ValuationSpectrum& spec = spectrum(a[0].text);
    std::vector<std::pair<ThomasonSet, IntervalChain>> flat;
    for (const auto& c : enumerate_smashing(spec))
      if (is_flat(c)) flat.emplace_back(chain_to_thomason(spec, c), c);
    json sets = json::array();
    for (const auto& t : thomason_sets(spec)) {
      std::string chain = "-";
      for (const auto& [set, c] : flat)
        if (set == t) chain = chain_text(spec, c);
      sets.push_back({{"set", thomason_text(spec, t)}, {"chain", chain}});
      lines.push_back(thomason_text(spec, t) + "  <->  " + chain);
    }
    r.data = {{"sets", sets}};
  } else if (st.command == "tor") {
    const ValuationSpectrum& spec = spectrum(a[0].text);
    const StdModule m = parse_module(spec, a[1].text);
    const StdModule n = parse_module(spec, a[2].text);
    const StdModule t0 = tor0(m, n), t1 = tor1(m, n);
    r.data = {{"tor0", t0.to_string()}, {"tor1", t1.to_string()},
              {"orthogonal", t0.is_zero() && t1.is_zero()}};
    lines.push_back("tor0 = " + t0.to_string());
    lines.push_back("tor1 = " + t1.to_string());
  } else if (st.command == "fiveterm") {
    const ValuationSpectrum& spec = spectrum(a[0].text);
    const StdModule m = parse_module(spec, a[1].text);
    const FiveTerm ft = five_term(spec, m, chain_arg(spec, a[2]));
    r.data = {{"t1", ft.t1.to_string()},
              {"xm_sub", ft.xm_sub.to_string()},
              {"xm_quotient", ft.xm_quotient.to_string()},
              {"kernel", ft.kernel.to_string()},
              {"tensored", ft.tensored.to_string()},
              {"xup", ft.xup.to_string()}};
    lines.push_back("Tor1(M,S) = " + ft.t1.to_string());
    lines.push_back("X_M: 0 -> " + ft.xm_sub.to_string() + " -> X_M -> " +
                    ft.xm_quotient.to_string() + " -> 0");
    lines.push_back("ker(M -> M(x)S) = " + ft.kernel.to_string());
    lines.push_back("M(x)S = " + ft.tensored.to_string());
    lines.push_back("X^M = " + ft.xup.to_string());
  } else if (st.command == "member") {
    const ValuationSpectrum& spec = spectrum(a[0].text);
    const FormalComplex x = parse_complex(spec, a[1].text);
    const bool in = smashing_membership(spec, x, chain_arg(spec, a[2]));
    r.data = {{"member", in}};
    lines.push_back(bool_text(in));
  } else if (st.command == "snf" || st.command == "decompose") {
    std::optional<ValMatrix> m;
    if (!a[0].quoted && bindings_.count(a[0].text)) {
      const auto* bound = std::get_if<ValMatrix>(&bindings_.at(a[0].text));
      if (!bound) fail(ErrorKind::TypeMismatch, "'" + a[0].text + "' is not a matrix");
      m = *bound;
    } else {
      m = parse_matrix_file(read_file(a[0].text)).second;
    }
    if (st.command == "snf") {
      const SnfResult s = snf(*m);
      json diag = json::array();
      std::string diag_line = "diagonal:";
      for (const auto& v : s.diag_values) {
        diag.push_back(valuation_text(v));
        diag_line += " " + valuation_text(v);
      }
      r.data = {{"U", matrix_json(s.U)}, {"D", matrix_json(s.D)}, {"V", matrix_json(s.V)},
                {"diagonal", diag}};
      lines.push_back(diag_line);
      push_matrix(lines, "U", s.U);
      push_matrix(lines, "D", s.D);
      push_matrix(lines, "V", s.V);
    } else {
      json parts = json::array();
      std::string text;
      for (const auto& c : decompose_fp_module(*m)) {
        parts.push_back(summand_text(c));
        text += (text.empty() ? "" : " + ") + summand_text(c);
      }
      r.data = {{"summands", parts}};
      lines.push_back(text.empty() ? "0" : text);
    }
  } else if (st.command == "mazet verify") {
    std::map<std::string, std::string> fields;
    std::size_t line_no = 0;
    std::istringstream in(read_file(a[0].text));
    for (std::string l; std::getline(in, l);) {
      ++line_no;
      if (auto h = l.find('#'); h != std::string::npos) l.erase(h);
      if (trim(l).empty()) continue;
      const auto colon = l.find(':');
      if (colon == std::string::npos)
        fail(ErrorKind::ParseError, "mazet file line " + std::to_string(line_no) + ": expected 'key: value'");
      const std::string key = trim(l.substr(0, colon));
      if (key != "group" && key != "chain" && key != "s" && key != "P" && key != "Y" && key != "Q")
        fail(ErrorKind::ParseError, "mazet file line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      fields[key] = trim(l.substr(colon + 1));
    }
    for (const char* key : {"group", "chain", "s", "P", "Y", "Q"})
      if (!fields.count(key))
        fail(ErrorKind::ParseError, std::string("mazet file is missing '") + key + ":'");
    const GroupHandle g = build_group(parse_descriptor(fields["group"]));
    const ValuationSpectrum spec = ValuationSpectrum::from_group(g);
    const HomEpiDescriptor f = classify_chain(spec, parse_chain(spec, fields["chain"]));
    ComponentVector s;
    for (const auto& e : split(fields["s"], ';')) s.push_back(parse_field_element(g, e));
    const bool ok = verify_mazet(spec, f, s, matrix_rows(g, fields["P"]),
                                 matrix_rows(g, fields["Y"]), matrix_rows(g, fields["Q"]));
    r.data = {{"accepted", ok}, {"target", f.ring}};
    if (ok) {
      json runs = json::array();
      for (const auto& run : locally_constant_decomposition(spec, f, s))
        runs.push_back({{"first", run.first}, {"last", run.last}, {"element", run.element.to_string()}});
      r.data["runs"] = runs;
      lines.push_back("accepted: s lies in the dominion of R -> " + f.ring);
      lines.push_back("locally constant runs: " + std::to_string(runs.size()));
    } else {
      r.status = Status::ValidationFailure;
      lines.push_back("rejected: not a Mazet presentation for s");
    }
  } else {
    fail(ErrorKind::ParseError, "unknown command '" + st.command + "'");
  }
  return r;
}

void render(const CommandResult& r, Format fmt, std::ostream& out, std::ostream& err) {
  if (fmt == Format::Json) {
    json j = {{"command", r.command}, {"status", status_name(r.status)}, {"data", r.data}};
    out << j.dump() << '\n';
    return;
  }
  std::ostream& dest = r.status == Status::Ok ? out : err;
  for (const auto& l : r.lines) dest << l << '\n';
}

Status run_script(std::string_view text, Format fmt, const std::filesystem::path& base_dir,
                  std::ostream& out, std::ostream& err) {
  std::vector<Statement> statements;
  try {
    statements = parse_script(text);
  } catch (const Error& e) {
    CommandResult r;
    r.command = "parse";
    r.status = Status::ParseFailure;
    r.data = {{"error", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
    r.lines.push_back(std::string(error_kind_name(e.kind())) + ": " + e.what());
    render(r, fmt, out, err);
    return r.status;
  }
  Session session(base_dir);
  for (const auto& st : statements) {
    const CommandResult r = session.execute(st);
    render(r, st.json ? Format::Json : fmt, out, err);
    if (r.status != Status::Ok) return r.status;
  }
  return Status::Ok;
}

}  // namespace smashlab::cli
