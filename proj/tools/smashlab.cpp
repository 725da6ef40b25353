#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "smashlab/cli.hpp"

using smashlab::cli::Format;

int main(int argc, char** argv) {
  CLI::App app{"smashlab: smashing localizations of valuation domains"};
  app.require_subcommand(0, 1);
  std::vector<std::string> statements;
  bool json = false;
  app.add_option("-e", statements, "Run one statement (repeatable)");
  app.add_flag("--json", json, "Structured output, one JSON object per line");
  std::string script;
  auto* run = app.add_subcommand("run", "Run a script file");
  run->add_option("script", script, "Script path")->required();
  run->add_flag("--json", json, "Structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Format fmt = json ? Format::Json : Format::Text;
  if (const char* env = std::getenv("SMASHLAB_FORMAT"); env && !json) {
    const std::string v(env);
    if (v == "json") {
      fmt = Format::Json;
    } else if (v != "text" && !v.empty()) {
      std::cerr << "SMASHLAB_FORMAT must be text or json, got '" << v << "'\n";
      return 2;
    }
  }

  std::string text;
  std::filesystem::path base;
  if (run->parsed()) {
    std::ifstream in(script, std::ios::binary);
    if (!in) {
      std::cerr << "cannot read script '" << script << "'\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    base = std::filesystem::path(script).parent_path();
  } else if (!statements.empty()) {
    for (const auto& s : statements) text += s + "\n";
  } else {
    std::cerr << app.help();
    return 2;
  }
  const auto status = smashlab::cli::run_script(text, fmt, base, std::cout, std::cerr);
  return smashlab::cli::exit_code(status);
}
