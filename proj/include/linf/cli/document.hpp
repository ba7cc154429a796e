#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "linf/coalgebra/coderivation.hpp"
#include "linf/linfty/linfty.hpp"
#include "linf/prelie/prelie.hpp"

namespace linf::cli {

using Json = nlohmann::ordered_json;

enum class DocumentKind { prelie_left, prelie_right, dgla, linfty };

const char *kind_name(DocumentKind k);

/// An algebra definition as read from disk. Only the fields of its kind are
/// set; nothing about the structure is verified beyond name resolution and
/// degree homogeneity of each entry.
struct AlgebraDocument {
  DocumentKind kind = DocumentKind::prelie_left;
  GradedSpace space;
  std::optional<TensorMap> product;      ///< prelie kinds
  std::optional<TensorMap> bracket;      ///< dgla
  std::optional<TensorMap> differential; ///< prelie and dgla, degree 1
  std::optional<Coderivation> taylor;    ///< linfty
  std::string digest;                    ///< SHA-256 of the source bytes

  PreLieAlgebra prelie() const;
  Dgla dgla() const;
};

/// ParseError (with line and column) for malformed JSON or values,
/// SemanticError naming the offending entity otherwise.
AlgebraDocument parse_document(std::string_view text);
AlgebraDocument load_document(const std::filesystem::path &path);

/// Canonical encoding; entries sorted by inputs then output.
Json to_json(const AlgebraDocument &doc);

/// Structure-constant entries of a map, one per nonzero coefficient.
Json entries_json(const GradedSpace &space, const std::map<Word, Vector> &entries);

/// A linfty-kind document holding q_1..q_N of a reduced degree-1 structure.
AlgebraDocument linfty_document(const Coderivation &q);

std::string sha256_hex(std::string_view bytes);

} // namespace linf::cli
