#include "linf/cli/commands.hpp"

#include <algorithm>

#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"
#include "linf/linfty/ce.hpp"
#include "linf/linfty/homotopy_abelian.hpp"
#include "linf/linfty/splitting.hpp"
#include "linf/linfty/transfer.hpp"
#include "linf/oracle/oracle.hpp"

namespace linf::cli {

const std::vector<std::string> &command_names() {
  static const std::vector<std::string> names{"validate",      "kapranov",     "check-linfty",
                                              "splitting",     "ce-cohomology", "minimal-model",
                                              "homotopy-abelian", "oracle"};
  return names;
}

namespace {

constexpr const char *kSemantics =
    "SUPPORTED(N): every check passed on the structure truncated at arity N; nothing is claimed "
    "beyond N. REFUTED(n): an obstruction built from q_1..q_n only, so it persists at every "
    "truncation N >= n. PASS/FAIL: a direct check of the stated identities up to arity N.";

bool is_prelie(const AlgebraDocument &doc) {
  return doc.kind == DocumentKind::prelie_left || doc.kind == DocumentKind::prelie_right;
}

TensorMap prelie_differential(const AlgebraDocument &doc) {
  return doc.differential.value_or(TensorMap(doc.space, 1, 1));
}

/// The L∞[1] structure of a document, known at least to `arity`.
Coderivation structure(const AlgebraDocument &doc, int arity) {
  switch (doc.kind) {
  case DocumentKind::prelie_left:
  case DocumentKind::prelie_right:
    return kapranov(doc.prelie(), prelie_differential(doc), arity).structure;
  case DocumentKind::dgla:
    return from_dgla(doc.dgla());
  case DocumentKind::linfty:
    return *doc.taylor;
  }
  throw ArgumentError("unknown document kind");
}

Json names(const GradedSpace &s, const Word &w) {
  Json out = Json::array();
  for (int g : w)
    out.push_back(s.name(g));
  return out;
}

Json vector_json(const GradedSpace &s, const Vector &v) {
  Json out = Json::array();
  for (const auto &[g, c] : v)
    out.push_back(Json{{"generator", s.name(g)}, {"coefficient", c.str()}});
  return out;
}

Json coefficients_json(const GradedSpace &s, const Coderivation &q, int from, int to, bool skip_zero = false) {
  Json out = Json::array();
  for (int n = from; n <= to; ++n) {
    const SymMap *m = q.coefficient(n);
    if (skip_zero && (!m || m->is_zero()))
      continue;
    out.push_back(Json{{"arity", n}, {"entries", m ? entries_json(s, m->entries()) : Json::array()}});
  }
  return out;
}

std::string supported(int n) { return "SUPPORTED(" + std::to_string(n) + ")"; }
std::string refuted(int n) { return "REFUTED(" + std::to_string(n) + ")"; }

Json header(const std::string &command, const AlgebraDocument &doc, int max_arity) {
  Json r;
  r["command"] = command;
  r["input"] = Json{{"kind", kind_name(doc.kind)}, {"sha256", doc.digest}};
  r["max_arity"] = max_arity;
  r["semantics"] = kSemantics;
  return r;
}

Outcome finish(Json report, bool pass, const std::string &verdict) {
  report["verdict"] = verdict;
  return {std::move(report), pass ? 0 : 1, std::nullopt};
}

Json linfty_check_json(const GradedSpace &s, const LinftyCheck &c) {
  Json defects = Json::array();
  for (const auto &[n, m] : c.defects)
    defects.push_back(Json{{"arity", n}, {"entries", entries_json(s, m.entries())}});
  Json lowest = c.lowest_failure() ? Json(*c.lowest_failure()) : Json(nullptr);
  return Json{{"passed", c.passed()}, {"lowest_failure", lowest}, {"defects", defects}};
}

Outcome validate(const AlgebraDocument &doc, int n) {
  Json r = header("validate", doc, n);
  const auto &s = doc.space;
  bool pass = true;
  if (is_prelie(doc)) {
    const PreLieAlgebra l = doc.prelie();
    const auto pc = check_prelie(l);
    Json prelie{{"chirality", doc.kind == DocumentKind::prelie_left ? "left" : "right"},
                {"passed", pc.passed()},
                {"message", pc.describe(s)}};
    prelie["associator_failure"] = pc.associator_failure ? names(s, *pc.associator_failure) : Json(nullptr);
    prelie["jacobi_failure"] = pc.jacobi_failure ? names(s, *pc.jacobi_failure) : Json(nullptr);
    r["prelie"] = prelie;
    pass = pc.passed();
    if (doc.differential && pass) {
      const auto dc = check_derivation(l, *doc.differential);
      Json d{{"bracket_derivation", dc.is_derivation()},
             {"square_zero", !dc.square_failure},
             {"product_derivation", dc.is_product_derivation()},
             {"message", dc.describe(s)}};
      d["bracket_failure"] = dc.bracket_failure ? names(s, *dc.bracket_failure) : Json(nullptr);
      d["square_failure"] = dc.square_failure ? Json(s.name(*dc.square_failure)) : Json(nullptr);
      d["product_failure"] = dc.product_failure ? names(s, *dc.product_failure) : Json(nullptr);
      r["differential"] = d;
      pass = dc.passed();
    } else {
      r["differential"] = nullptr;
    }
  } else if (doc.kind == DocumentKind::dgla) {
    const Dgla g = doc.dgla();
    const oracle::DglaData data{g.space, g.differential, g.bracket};
    Json axioms{{"antisymmetry", oracle::holds_antisymmetry(data)},
                {"d_squared", oracle::holds_d_squared(data)},
                {"leibniz", oracle::holds_leibniz(data)},
                {"jacobi", oracle::holds_jacobi(data)}};
    r["axioms"] = axioms;
    const auto failure = oracle::dgla_axioms(data);
    r["first_failure"] =
        failure ? Json{{"axiom", failure->axiom}, {"inputs", names(s, failure->inputs)}} : Json(nullptr);
    pass = !failure;
  } else {
    const Coderivation &q = *doc.taylor;
    const int up_to = std::min(n, q.truncation());
    r["checked_to"] = up_to;
    const auto c = check_linfty(q, up_to);
    r["linfty"] = linfty_check_json(s, c);
    pass = c.passed();
  }
  return finish(std::move(r), pass, pass ? "PASS" : "FAIL");
}

Outcome kapranov_command(const AlgebraDocument &doc, int n, KapranovVariant variant) {
  if (!is_prelie(doc))
    throw ArgumentError(std::string("kapranov needs a pre-Lie document, got kind ") + kind_name(doc.kind));
  Json r = header("kapranov", doc, n);
  const auto tower = kapranov(doc.prelie(), prelie_differential(doc), n, variant);
  r["variant"] = variant_name(variant);
  r["symmetric"] = true;
  r["tower"] = coefficients_json(doc.space, tower.structure, 1, n);
  const auto rec = verify_compact_recursion(tower);
  Json recursion{{"witness", variant == KapranovVariant::plain ? "sigma_x + nabla_x" : "sigma_x - nabla_x"},
                 {"checked_to", n - 1},
                 {"passed", !rec}};
  recursion["failure"] =
      rec ? Json{{"generator", doc.space.name(rec->generator)}, {"arity", rec->arity}} : Json(nullptr);
  r["compact_recursion"] = recursion;
  Outcome out = finish(std::move(r), !rec, rec ? "FAIL" : "PASS");
  out.emitted = linfty_document(tower.structure);
  return out;
}

Outcome check_linfty_command(const AlgebraDocument &doc, int n) {
  Json r = header("check-linfty", doc, n);
  const Coderivation q = structure(doc, n);
  const auto c = check_linfty(q, n);
  r["linfty"] = linfty_check_json(q.space(), c);
  return finish(std::move(r), c.passed(), c.passed() ? "PASS" : "FAIL");
}

Json splitting_json(const SplittingResult &res) {
  Json j{{"feasible", res.feasible}, {"unknowns", res.unknowns}, {"equations", res.equations}};
  j["infeasible_at"] = res.infeasible_at ? Json(*res.infeasible_at) : Json(nullptr);
  j["certificate_size"] = res.certificate_size;
  return j;
}

/// σ + ∇ check for pre-Lie documents whose tower is an L∞ structure.
Json kapranov_witness_json(const AlgebraDocument &doc, const Coderivation &q, int n) {
  if (!is_prelie(doc))
    return nullptr;
  const auto dc = check_derivation(doc.prelie(), prelie_differential(doc));
  if (dc.square_failure || !check_linfty(q, n).passed())
    return Json{{"applicable", false}};
  const auto ks = kapranov_splitting(doc.prelie(), q, n);
  Json j{{"applicable", true}, {"witness", "sigma_x + nabla_x"}, {"verified", !ks.failure}};
  j["failure"] = ks.failure ? Json{{"generator", doc.space.name(ks.failure->generator)},
                                   {"arity", ks.failure->arity}}
                            : Json(nullptr);
  return j;
}

Outcome splitting_command(const AlgebraDocument &doc, int n) {
  Json r = header("splitting", doc, n);
  const Coderivation q = structure(doc, n + 1);
  const auto res = find_splitting(q, n);
  Json j = splitting_json(res);
  if (res.feasible) {
    Json witness = Json::array();
    const auto &s = q.space();
    for (int v = 0; v < static_cast<int>(s.dim()); ++v)
      witness.push_back(Json{{"generator", s.name(v)},
                             {"components", coefficients_json(s, res.witness[v], 1, n, true)}});
    j["witness"] = witness;
  }
  r["splitting"] = j;
  r["kapranov_witness"] = kapranov_witness_json(doc, q, n);
  return finish(std::move(r), res.feasible, res.feasible ? supported(n) : refuted(*res.infeasible_at + 1));
}

Json injectivity_json(const HInjectivityReport &h) {
  Json degrees = Json::array();
  for (const auto &d : h.degrees)
    degrees.push_back(Json{{"degree", d.degree},
                           {"reduced", d.reduced_cohomology},
                           {"nonreduced", d.nonreduced_cohomology},
                           {"kernel", d.kernel}});
  return Json{{"degrees", degrees}, {"kernel_total", h.total_kernel()}, {"injective", h.injective()}};
}

Outcome ce_command(const AlgebraDocument &doc, int n) {
  Json r = header("ce-cohomology", doc, n);
  const auto h = h_injectivity(structure(doc, n + 1), n);
  r["cohomology"] = injectivity_json(h);
  return finish(std::move(r), h.injective(), h.injective() ? "PASS" : "FAIL");
}

Outcome minimal_model_command(const AlgebraDocument &doc, int n) {
  Json r = header("minimal-model", doc, n);
  const Coderivation q = structure(doc, n);
  const auto c = contraction_from_cohomology(q.space(), q.coefficient_or_zero(1));
  const auto t = transfer(q, c, n);
  const auto &h = c.cohomology;
  Json gens = Json::array();
  for (int g = 0; g < static_cast<int>(h.dim()); ++g)
    gens.push_back(Json{{"name", h.name(g)},
                        {"degree", h.degree(g)},
                        {"representative", vector_json(q.space(), c.inclusion.evaluate(Word{g}))}});
  r["cohomology"] = gens;
  r["brackets"] = coefficients_json(h, t.minimal, 2, n);
  const auto lowest = t.lowest_nonzero();
  r["massey_vanishing"] = !lowest;
  r["lowest_nonzero"] = lowest ? Json(*lowest) : Json(nullptr);
  return finish(std::move(r), !lowest, lowest ? refuted(*lowest) : supported(n));
}

Outcome homotopy_abelian_command(const AlgebraDocument &doc, int n) {
  Json r = header("homotopy-abelian", doc, n);
  const Coderivation q = structure(doc, n + 1);
  const auto v = is_homotopy_abelian(q, n);
  r["splitting"] = splitting_json(v.splitting);
  r["injectivity"] = injectivity_json(v.injectivity);
  const auto lowest = v.transfer.lowest_nonzero();
  r["transfer"] = Json{{"checked_to", n + 1}, {"lowest_nonzero", lowest ? Json(*lowest) : Json(nullptr)}};
  r["kapranov_witness"] = kapranov_witness_json(doc, q, n);
  return finish(std::move(r), v.supported, v.supported ? supported(n) : refuted(*v.refuted_at));
}

Outcome oracle_command(const AlgebraDocument &doc, int n) {
  Json r = header("oracle", doc, n);
  const auto &s = doc.space;
  const int brute = std::min(n, 3);
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const char *name, int arity, bool agree) {
    checks.push_back(Json{{"check", name}, {"max_arity", arity}, {"agree", agree}});
    all = all && agree;
  };

  const Coderivation q = structure(doc, n);
  bool expand_ok = true;
  for (int k = 1; k <= brute && expand_ok; ++k)
    for (const auto &w : symmetric_monomials(q.space(), k))
      if (!(expand(q.truncated(brute), w) == oracle::expand_all_permutations(q.truncated(brute), w))) {
        expand_ok = false;
        break;
      }
  record("expand vs all-permutations sum", brute, expand_ok);
  record("nr_product vs expand-compose-corestrict", brute,
         !first_difference(nr_product(q, q, brute), oracle::nr_product_by_composition(q, q, brute), brute));

  if (is_prelie(doc)) {
    const PreLieAlgebra left = right_to_left(doc.prelie());
    const auto tower = kapranov(left, prelie_differential(doc), n);
    oracle::KapranovRecursion rec(left.product, prelie_differential(doc));
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k)
      for (const auto &w : tensor_words(s, k)) {
        const auto canon = canonicalize(s, w);
        const Vector expected =
            canon.sign == 0 ? Vector() : tower.structure.evaluate(canon.word).scaled(Scalar(canon.sign));
        if (!(rec(w) == expected)) {
          ok = false;
          break;
        }
      }
    record("kapranov tower vs written-out recursion on ordered tuples", n, ok);
  } else if (doc.kind == DocumentKind::dgla) {
    const Dgla g = doc.dgla();
    const bool axioms = !oracle::dgla_axioms({g.space, g.differential, g.bracket});
    record("dgla axioms vs Q•Q = 0", 3, axioms == check_linfty(q, 3).passed());
  }
  r["checks"] = checks;
  return finish(std::move(r), all, all ? "PASS" : "FAIL");
}

} // namespace

Outcome run(const std::string &command, const AlgebraDocument &doc, const Options &options) {
  const int n = options.max_arity;
  if (n < 1)
    throw ArgumentError("--max-arity must be positive");
  if (command == "validate")
    return validate(doc, n);
  if (command == "kapranov")
    return kapranov_command(doc, n, options.variant);
  if (command == "check-linfty")
    return check_linfty_command(doc, n);
  if (command == "splitting")
    return splitting_command(doc, n);
  if (command == "ce-cohomology")
    return ce_command(doc, n);
  if (command == "minimal-model")
    return minimal_model_command(doc, n);
  if (command == "homotopy-abelian")
    return homotopy_abelian_command(doc, n);
  if (command == "oracle")
    return oracle_command(doc, n);
  throw ArgumentError("unknown command \"" + command + "\"");
}

} // namespace linf::cli
