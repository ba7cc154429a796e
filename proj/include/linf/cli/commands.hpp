#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linf/cli/document.hpp"
#include "linf/prelie/kapranov.hpp"

namespace linf::cli {

inline constexpr int kDefaultMaxArity = 4;

struct Options {
  int max_arity = kDefaultMaxArity;
  KapranovVariant variant = KapranovVariant::plain;
};

struct Outcome {
  Json report;
  int exit_code = 0; ///< 0 pass or SUPPORTED, 1 fail or REFUTED
  std::optional<AlgebraDocument> emitted; ///< the tower, for `kapranov`
};

const std::vector<std::string> &command_names();

/// Runs one command. Input problems and unmet preconditions propagate as
/// the module exceptions.
Outcome run(const std::string &command, const AlgebraDocument &doc, const Options &options);

} // namespace linf::cli
