#include "linf/cli/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"

namespace linf::cli {

const char *kind_name(DocumentKind k) {
  switch (k) {
  case DocumentKind::prelie_left:
    return "prelie-left";
  case DocumentKind::prelie_right:
    return "prelie-right";
  case DocumentKind::dgla:
    return "dgla";
  case DocumentKind::linfty:
    return "linfty";
  }
  return "?";
}

PreLieAlgebra AlgebraDocument::prelie() const {
  if (kind != DocumentKind::prelie_left && kind != DocumentKind::prelie_right)
    throw ArgumentError(std::string("expected a pre-Lie document, got kind ") + kind_name(kind));
  return {space, kind == DocumentKind::prelie_left ? Chirality::left : Chirality::right, *product,
          differential};
}

Dgla AlgebraDocument::dgla() const {
  if (kind != DocumentKind::dgla)
    throw ArgumentError(std::string("expected a dgla document, got kind ") + kind_name(kind));
  return {space, differential.value_or(TensorMap(space, 1, 1)), *bracket};
}

namespace {

struct Position {
  std::size_t line = 1, column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

std::string at(std::string_view text, std::size_t offset) {
  auto p = position_of(text, offset);
  return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column);
}

class Reader {
public:
  explicit Reader(std::string_view text) : text_(text) {}

  AlgebraDocument read(const Json &root) {
    if (!root.is_object())
      throw SemanticError("document must be a JSON object");
    AlgebraDocument doc;
    doc.kind = read_kind(root);
    doc.space = read_generators(root);

    std::set<std::string> allowed{"kind", "generators", "differential"};
    switch (doc.kind) {
    case DocumentKind::prelie_left:
    case DocumentKind::prelie_right:
      allowed.insert("product");
      doc.product = read_map(root, "product", doc.space, 2, 0, true);
      break;
    case DocumentKind::dgla:
      allowed.insert("bracket");
      doc.bracket = read_map(root, "bracket", doc.space, 2, 0, true);
      break;
    case DocumentKind::linfty:
      allowed = {"kind", "generators", "taylor", "max_arity"};
      doc.taylor = read_taylor(root, doc.space);
      break;
    }
    for (const auto &[key, value] : root.items())
      if (!allowed.count(key))
        throw SemanticError("field \"" + key + "\" is not allowed for kind " + kind_name(doc.kind));
    if (doc.kind != DocumentKind::linfty && root.contains("differential"))
      doc.differential = read_map(root, "differential", doc.space, 1, 1, true);
    return doc;
  }

private:
  static const Json &field(const Json &obj, const char *name) {
    auto it = obj.find(name);
    if (it == obj.end())
      throw SemanticError(std::string("missing field \"") + name + "\"");
    return *it;
  }

  DocumentKind read_kind(const Json &root) {
    const Json &k = field(root, "kind");
    if (!k.is_string())
      throw SemanticError("field \"kind\" must be a string");
    const auto s = k.get<std::string>();
    for (auto kind : {DocumentKind::prelie_left, DocumentKind::prelie_right, DocumentKind::dgla,
                      DocumentKind::linfty})
      if (s == kind_name(kind))
        return kind;
    throw SemanticError("unknown kind \"" + s + "\"");
  }

  GradedSpace read_generators(const Json &root) {
    const Json &gens = field(root, "generators");
    if (!gens.is_array())
      throw SemanticError("field \"generators\" must be an array");
    std::vector<Generator> out;
    std::set<std::string> seen;
    for (const auto &g : gens) {
      if (!g.is_object() || !g.contains("name") || !g["name"].is_string() || !g.contains("degree") ||
          !g["degree"].is_number_integer())
        throw SemanticError("each generator needs a string \"name\" and an integer \"degree\"");
      const auto name = g["name"].get<std::string>();
      if (name.empty())
        throw SemanticError("generator with an empty name");
      if (!seen.insert(name).second)
        throw SemanticError("generator \"" + name + "\" declared twice");
      out.push_back({name, g["degree"].get<int>()});
    }
    return GradedSpace(std::move(out));
  }

  int generator(const GradedSpace &space, const Json &name, const std::string &where) {
    if (!name.is_string())
      throw SemanticError(where + ": generator references must be strings");
    const auto s = name.get<std::string>();
    auto idx = space.find(s);
    if (!idx)
      throw SemanticError(where + ": undeclared generator \"" + s + "\"");
    return *idx;
  }

  Scalar coefficient(const Json &c, const std::string &where) {
    if (c.is_number_integer())
      return Scalar(c.get<long>());
    if (!c.is_string())
      throw ParseError(where + ": coefficient must be a string \"p/q\" or an integer");
    const auto s = c.get<std::string>();
    try {
      return Scalar::parse(s);
    } catch (const ParseError &e) {
      std::string msg = where + ": " + e.what();
      if (auto pos = text_.find("\"" + s + "\""); pos != std::string_view::npos)
        msg += " at " + at(text_, pos);
      throw ParseError(msg);
    }
  }

  struct Entry {
    Word inputs;
    int output;
    Scalar c;
  };

  std::vector<Entry> read_entries(const Json &list, const char *name, const GradedSpace &space) {
    if (!list.is_array())
      throw SemanticError(std::string("field \"") + name + "\" must be an array");
    std::vector<Entry> out;
    int k = 0;
    for (const auto &e : list) {
      const std::string where = std::string(name) + " entry " + std::to_string(k++);
      if (!e.is_object() || !e.contains("inputs") || !e["inputs"].is_array() || !e.contains("output") ||
          !e.contains("coefficient"))
        throw SemanticError(where + ": needs \"inputs\", \"output\" and \"coefficient\"");
      for (const auto &[key, value] : e.items())
        if (key != "inputs" && key != "output" && key != "coefficient")
          throw SemanticError(where + ": unexpected field \"" + key + "\"");
      Entry entry{{}, generator(space, e["output"], where), coefficient(e["coefficient"], where)};
      for (const auto &in : e["inputs"])
        entry.inputs.push_back(generator(space, in, where));
      out.push_back(std::move(entry));
    }
    return out;
  }

  TensorMap read_map(const Json &root, const char *name, const GradedSpace &space, int arity, int degree,
                     bool required) {
    TensorMap map(space, arity, degree);
    if (!root.contains(name)) {
      if (required)
        throw SemanticError(std::string("missing field \"") + name + "\"");
      return map;
    }
    int k = 0;
    for (const auto &e : read_entries(root[name], name, space)) {
      const std::string where = std::string(name) + " entry " + std::to_string(k++);
      if (static_cast<int>(e.inputs.size()) != arity)
        throw SemanticError(where + ": expected " + std::to_string(arity) + " inputs");
      try {
        map.add(e.inputs, e.output, e.c);
      } catch (const ArgumentError &err) {
        throw SemanticError(where + ": " + err.what());
      }
    }
    return map;
  }

  Coderivation read_taylor(const Json &root, const GradedSpace &space) {
    int truncation = kExact;
    if (root.contains("max_arity")) {
      if (!root["max_arity"].is_number_integer() || root["max_arity"].get<int>() < 1)
        throw SemanticError("field \"max_arity\" must be a positive integer");
      truncation = root["max_arity"].get<int>();
    }
    Coderivation q(space, Variant::reduced, 1, truncation);
    std::map<int, SymMap> parts;
    int k = 0;
    for (const auto &e : read_entries(field(root, "taylor"), "taylor", space)) {
      const std::string where = "taylor entry " + std::to_string(k++);
      const int n = static_cast<int>(e.inputs.size());
      if (n < 1)
        throw SemanticError(where + ": needs at least one input");
      if (n > truncation)
        throw SemanticError(where + ": arity " + std::to_string(n) + " exceeds max_arity");
      if (canonicalize(space, e.inputs).sign == 0)
        throw SemanticError(where + ": repeated odd generator, the entry vanishes identically");
      try {
        parts.try_emplace(n, space, n, 1).first->second.add(e.inputs, e.output, e.c);
      } catch (const ArgumentError &err) {
        throw SemanticError(where + ": " + err.what());
      }
    }
    for (auto &[n, m] : parts)
      q.set_coefficient(std::move(m));
    return q;
  }

  std::string_view text_;
};

} // namespace

AlgebraDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::string what = e.what();
    if (auto p = what.find(": "); p != std::string::npos && what.find("line") < p)
      what = what.substr(p + 2);
    throw ParseError("malformed JSON at " + at(text, offset) + ": " + what);
  }
  AlgebraDocument doc = Reader(text).read(root);
  doc.digest = sha256_hex(text);
  return doc;
}

AlgebraDocument load_document(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

Json entries_json(const GradedSpace &space, const std::map<Word, Vector> &entries) {
  Json out = Json::array();
  for (const auto &[w, v] : entries)
    for (const auto &[g, c] : v) {
      Json inputs = Json::array();
      for (int i : w)
        inputs.push_back(space.name(i));
      out.push_back(Json{{"inputs", inputs}, {"output", space.name(g)}, {"coefficient", c.str()}});
    }
  return out;
}

Json to_json(const AlgebraDocument &doc) {
  Json out;
  out["kind"] = kind_name(doc.kind);
  Json gens = Json::array();
  for (const auto &g : doc.space.generators())
    gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
  out["generators"] = gens;
  if (doc.product)
    out["product"] = entries_json(doc.space, doc.product->entries());
  if (doc.bracket)
    out["bracket"] = entries_json(doc.space, doc.bracket->entries());
  if (doc.differential)
    out["differential"] = entries_json(doc.space, doc.differential->entries());
  if (doc.taylor) {
    if (!doc.taylor->is_exact())
      out["max_arity"] = doc.taylor->truncation();
    Json t = Json::array();
    for (const auto &[n, m] : doc.taylor->taylor())
      for (auto &e : entries_json(doc.space, m.entries()))
        t.push_back(std::move(e));
    out["taylor"] = t;
  }
  return out;
}

AlgebraDocument linfty_document(const Coderivation &q) {
  if (q.variant() != Variant::reduced || q.degree() != 1)
    throw ArgumentError("linfty documents hold reduced degree-1 structures");
  AlgebraDocument doc;
  doc.kind = DocumentKind::linfty;
  doc.space = q.space();
  doc.taylor = q;
  return doc;
}

} // namespace linf::cli
