#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "linf/cli/commands.hpp"
#include "linf/core/errors.hpp"

using namespace linf;

namespace {

void write_file(const std::string &path, const std::string &bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ParseError("cannot write " + path);
  out << bytes;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact L-infinity toolkit: Kapranov brackets, splittings, CE cohomology, minimal models."};
  app.require_subcommand(1);

  std::string input, output, emit;
  cli::Options options;
  std::string variant = "plain";

  const std::map<std::string, std::string> about{
      {"validate", "check the document's algebraic axioms"},
      {"kapranov", "Kapranov tower of a pre-Lie algebra with derivation"},
      {"check-linfty", "check Q.Q = 0 up to arity N"},
      {"splitting", "search for a splitting witness up to arity N"},
      {"ce-cohomology", "Chevalley-Eilenberg cohomology and the map H(i)"},
      {"minimal-model", "homotopy transfer to cohomology"},
      {"homotopy-abelian", "combined verdict from splitting, H(i) and transfer"},
      {"oracle", "compare fast paths against brute-force oracles"},
  };
  for (const auto &name : cli::command_names()) {
    auto *sub = app.add_subcommand(name, about.at(name));
    sub->add_option("input", input, "algebra document (JSON)")->required();
    sub->add_option("--max-arity", options.max_arity, "truncation arity N")
        ->default_val(cli::kDefaultMaxArity)
        ->check(CLI::PositiveNumber);
    sub->add_option("--output", output, "also write the JSON report here");
    if (name == "kapranov") {
      sub->add_option("--variant", variant, "plain or alternating")
          ->check(CLI::IsMember({"plain", "alternating"}));
      sub->add_option("--emit-linfty", emit, "write the tower as a linfty document");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  options.variant = variant == "plain" ? KapranovVariant::plain : KapranovVariant::alternating;
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto start = std::chrono::steady_clock::now();
    const auto doc = cli::load_document(input);
    const auto outcome = cli::run(command, doc, options);
    const std::string bytes = outcome.report.dump(2) + "\n";
    std::cout << bytes;
    if (!output.empty())
      write_file(output, bytes);
    if (!emit.empty() && outcome.emitted)
      write_file(emit, cli::to_json(*outcome.emitted).dump(2) + "\n");
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "linf " << command << ": " << outcome.report["verdict"].get<std::string>() << " in "
              << elapsed.count() << " s\n";
    return outcome.exit_code;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const SemanticError &e) {
    std::cerr << "invalid document: " << e.what() << "\n";
  } catch (const InternalConsistencyError &e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
