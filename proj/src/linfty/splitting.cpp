#include "linf/linfty/splitting.hpp"

#include "linf/core/errors.hpp"
#include "linf/core/linalg.hpp"
#include "linf/core/permutation.hpp"
#include "linf/linfty/ce.hpp"
#include "linf/linfty/linfty.hpp"

namespace linf {

SplittingMap sigma_splitting(const GradedSpace &space) {
  SplittingMap s;
  for (int v = 0; v < static_cast<int>(space.dim()); ++v)
    s.push_back(sigma(space, Vector(v, Scalar(1))));
  return s;
}

SplittingResult find_splitting(const Coderivation &q, int max_arity) {
  if (q.variant() != Variant::reduced || q.degree() != 1)
    throw ArgumentError("find_splitting expects a reduced degree-1 structure");
  if (max_arity < 1)
    throw ArgumentError("find_splitting: truncation arity must be positive");
  if (q.truncation() < max_arity + 1)
    throw PreconditionError("find_splitting: structure known up to arity " + std::to_string(q.truncation()) +
                            ", need " + std::to_string(max_arity + 1));
  require_linfty(q, max_arity + 1, "find_splitting");

  const GradedSpace &space = q.space();
  const int dim = static_cast<int>(space.dim());
  const auto basis = elementary_basis(space, 1, max_arity);
  ElementaryBracket bracket(q, max_arity);
  const SymMap q1 = q.coefficient_or_zero(1);

  // Unknowns x_{v,E} with |E| = |v|, ordered by arity of E, then v.
  struct Unknown {
    int v;
    const ElementaryCoderivation *e;
  };
  std::vector<Unknown> unknowns;
  std::map<std::pair<int, ElementaryCoderivation>, int> unknown_index;
  for (int n = 1; n <= max_arity; ++n)
    for (int v = 0; v < dim; ++v) {
      auto it = basis.find(space.degree(v));
      if (it == basis.end())
        continue;
      for (const auto &e : it->second)
        if (e.arity() == n) {
          unknown_index.emplace(std::make_pair(v, e), static_cast<int>(unknowns.size()));
          unknowns.push_back({v, &e});
        }
    }

  // Equation (v, w, g) at arity |w|:
  //   Σ_E x_{v,E} [Q,E](w)[g] - Σ_u c_u x_{u,(w,g)} = -q_{|w|+1}(v ⊙ w)[g]
  std::map<std::tuple<int, int, Word, int>, SparseVec> rows; // (arity, v, w, g)
  std::map<std::tuple<int, int, Word, int>, Scalar> rhs;
  auto row_key = [](int v, const Word &w, int g) { return std::make_tuple(static_cast<int>(w.size()), v, w, g); };

  for (std::size_t x = 0; x < unknowns.size(); ++x) {
    const auto &[v, e] = unknowns[x];
    for (const auto &[key, c] : bracket(*e))
      axpy(rows[row_key(v, key.first, key.second)], c, SparseVec{{static_cast<int>(x), Scalar(1)}});
  }
  for (int v = 0; v < dim; ++v) {
    Vector dv = q1.evaluate(Word{v});
    for (const auto &[u, cu] : dv)
      for (const auto &[key, x] : unknown_index) {
        if (key.first != u)
          continue;
        axpy(rows[row_key(v, key.second.inputs, key.second.output)], -cu,
             SparseVec{{x, Scalar(1)}});
      }
    for (int n = 1; n <= max_arity; ++n)
      for (const auto &w : symmetric_monomials(space, n)) {
        Word vw{v};
        vw.insert(vw.end(), w.begin(), w.end());
        for (const auto &[g, c] : q.evaluate(vw)) {
          auto key = row_key(v, w, g);
          rhs[key] -= c;
          rows[key]; // make sure the row exists
        }
      }
  }

  std::vector<SparseVec> a;
  std::vector<Scalar> b;
  std::vector<int> row_arity;
  for (auto &[key, row] : rows) {
    a.push_back(std::move(row));
    auto it = rhs.find(key);
    b.push_back(it == rhs.end() ? Scalar(0) : it->second);
    row_arity.push_back(std::get<0>(key));
  }

  SplittingResult out;
  out.max_arity = max_arity;
  out.unknowns = unknowns.size();
  out.equations = a.size();
  auto solved = solve_sparse(a, b, static_cast<int>(unknowns.size()));
  if (!solved.feasible) {
    out.infeasible_at = row_arity[static_cast<std::size_t>(*solved.first_inconsistent_row)];
    out.certificate_size = solved.certificate.size();
    return out;
  }
  out.feasible = true;
  out.witness = sigma_splitting(space);
  for (auto &s : out.witness)
    s = s.truncated(max_arity);
  for (const auto &[x, value] : solved.solution) {
    const auto &[v, e] = unknowns[static_cast<std::size_t>(x)];
    SymMap m(space, e->arity(), space.degree(v));
    m.add(e->inputs, e->output, value);
    out.witness[static_cast<std::size_t>(v)].add_to_coefficient(m);
  }
  return out;
}

std::optional<WitnessFailure> verify_splitting_witness(const Coderivation &q, const SplittingMap &s,
                                                       int max_arity) {
  const GradedSpace &space = q.space();
  if (s.size() != space.dim())
    throw ArgumentError("splitting witness needs one coderivation per basis vector");
  const Coderivation qn = q.embedded();
  const SymMap q1 = q.coefficient_or_zero(1);
  for (int v = 0; v < static_cast<int>(space.dim()); ++v) {
    const Coderivation &sv = s[static_cast<std::size_t>(v)];
    if (!(ev1(sv) == Vector(v, Scalar(1))))
      return WitnessFailure{v, 0};
    Coderivation lhs = nr_bracket(qn, sv, max_arity);
    Coderivation rhs(space, Variant::nonreduced, sv.degree() + 1);
    for (const auto &[u, c] : q1.evaluate(Word{v}))
      rhs += s[static_cast<std::size_t>(u)].scaled(c);
    const int up_to = std::min({max_arity, lhs.truncation(), rhs.truncation()});
    if (up_to < max_arity)
      throw PreconditionError("splitting witness or structure truncated below the requested arity");
    if (auto n = first_difference(lhs, rhs, up_to))
      return WitnessFailure{v, *n};
  }
  return std::nullopt;
}

} // namespace linf
