#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "smashlab/gps_ring.hpp"
#include "smashlab/smashing.hpp"
#include "smashlab/spectrum.hpp"

namespace smashlab::cli {

enum class Status { Ok, ValidationFailure, ParseFailure };
int exit_code(Status s);
std::string status_name(Status s);

enum class Format { Text, Json };

struct Arg {
  std::string text;
  bool quoted = false;
  std::size_t column = 0;
};

struct Statement {
  std::size_t line = 0;
  std::string source;
  std::string command;  // "group", "spec", "spec show", "smashing enumerate", ...
  std::string name;     // bound name, for definitions
  std::vector<Arg> args;
  bool json = false;
  std::optional<GroupDescriptor> descriptor;        // group
  std::optional<std::vector<PrimeSlot>> flags;      // spec = chain
};

// Throws Error(ParseError) with line and column on malformed input.
std::vector<Statement> parse_script(std::string_view text);

struct CommandResult {
  std::string command;
  Status status = Status::Ok;
  std::vector<std::string> lines;  // text rendering
  nlohmann::json data = nlohmann::json::object();
};

using Binding = std::variant<GroupHandle, ValuationSpectrum, RingElement, ValMatrix, IntervalChain>;

class Session {
 public:
  explicit Session(std::filesystem::path base_dir = {}) : base_dir_(std::move(base_dir)) {}
  CommandResult execute(const Statement& st);

 private:
  CommandResult dispatch(const Statement& st);
  void bind(const std::string& name, Binding value);
  const Binding& lookup(const std::string& name) const;
  GroupHandle group(const std::string& name) const;
  const ValuationSpectrum& spectrum(const std::string& name) const;
  IntervalChain chain_arg(const ValuationSpectrum& spec, const Arg& arg) const;
  std::string read_file(const std::string& path) const;

  std::filesystem::path base_dir_;
  std::map<std::string, Binding> bindings_;
};

// Text or one JSON object per line; failures in text form go to err.
void render(const CommandResult& r, Format fmt, std::ostream& out, std::ostream& err);

// Parses and runs a whole script, stopping at the first failure.
Status run_script(std::string_view text, Format fmt, const std::filesystem::path& base_dir,
                  std::ostream& out, std::ostream& err);

}  // namespace smashlab::cli
