#include "linf/linfty/linfty.hpp"

#include <set>

#include "linf/core/decalage.hpp"
#include "linf/core/errors.hpp"

namespace linf {

Coderivation from_dgla(const Dgla &dgla) {
  const GradedSpace &l = dgla.space;
  if (!(dgla.differential.source() == l) || !(dgla.bracket.source() == l) ||
      !(dgla.differential.target() == l) || !(dgla.bracket.target() == l))
    throw ArgumentError("dgla maps must live on the dgla space");
  if (dgla.differential.arity() != 1 || dgla.differential.degree() != 1)
    throw ArgumentError("dgla differential must be linear of degree 1");
  if (dgla.bracket.arity() != 2 || dgla.bracket.degree() != 0)
    throw ArgumentError("dgla bracket must be bilinear of degree 0");
  SymMap q1 = decalage_down(dgla.differential);
  SymMap q2 = decalage_down(dgla.bracket);
  Coderivation q(q1.source(), Variant::reduced, 1);
  q.set_coefficient(std::move(q1));
  q.set_coefficient(std::move(q2));
  return q;
}

std::optional<int> LinftyCheck::lowest_failure() const {
  if (defects.empty())
    return std::nullopt;
  return defects.begin()->first;
}

LinftyCheck check_linfty(const Coderivation &q, int max_arity) {
  if (q.variant() != Variant::reduced || q.degree() != 1)
    throw ArgumentError("an L∞[1] structure is a reduced coderivation of degree 1");
  if (max_arity > q.truncation())
    throw ArgumentError("check_linfty: structure is only known up to arity " +
                        std::to_string(q.truncation()));
  LinftyCheck out;
  out.max_arity = max_arity;
  Coderivation sq = nr_product(q, q, max_arity);
  for (const auto &[n, c] : sq.taylor())
    out.defects.emplace(n, c);
  return out;
}

void require_linfty(const Coderivation &q, int up_to, const char *who) {
  auto check = check_linfty(q, std::min(up_to, q.truncation()));
  if (auto n = check.lowest_failure())
    throw PreconditionError(std::string(who) + ": Q•Q does not vanish at arity " + std::to_string(*n));
}

TangentComplex tangent(const Coderivation &q) {
  return {q.space(), q.coefficient_or_zero(1)};
}

namespace {

// Position of each generator inside its degree component.
std::map<int, int> positions_in_degree(const GradedSpace &s) {
  std::map<int, int> pos;
  for (int k : s.degrees()) {
    auto basis = s.basis_in_degree(k);
    for (std::size_t j = 0; j < basis.size(); ++j)
      pos[basis[j]] = static_cast<int>(j);
  }
  return pos;
}

ChainComplex complex_of(const GradedSpace &s, const SymMap &d) {
  ChainComplex c;
  const auto pos = positions_in_degree(s);
  for (int k : s.degrees())
    c.set_dimension(k, static_cast<int>(s.basis_in_degree(k).size()));
  for (int k : s.degrees()) {
    std::vector<SparseVec> cols;
    for (int g : s.basis_in_degree(k)) {
      SparseVec col;
      for (const auto &[h, x] : d.evaluate(Word{g}))
        col.emplace(pos.at(h), x);
      cols.push_back(std::move(col));
    }
    c.set_differential(k, std::move(cols));
  }
  return c;
}

// Basis of cocycles of degree k (as vectors of V).
std::vector<Vector> cocycles(const GradedSpace &s, const SymMap &d, int k) {
  auto basis = s.basis_in_degree(k);
  auto target = s.basis_in_degree(k + 1);
  DenseMatrix m(target.size(), basis.size());
  std::map<int, std::size_t> row;
  for (std::size_t i = 0; i < target.size(); ++i)
    row[target[i]] = i;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto &[h, x] : d.evaluate(Word{basis[j]}))
      m(row.at(h), j) = x;
  std::vector<Vector> out;
  for (const auto &v : m.nullspace()) {
    Vector z;
    for (std::size_t j = 0; j < v.size(); ++j)
      z.add(basis[j], v[j]);
    out.push_back(std::move(z));
  }
  return out;
}

SparseVec to_sparse(const Vector &v) { return SparseVec(v.begin(), v.end()); }

} // namespace

ChainComplex as_chain_complex(const TangentComplex &t) { return complex_of(t.space, t.differential); }

std::map<int, int> cohomology_dimensions(const TangentComplex &t) {
  std::map<int, int> out;
  ChainComplex c = as_chain_complex(t);
  for (int k : c.degrees())
    if (int h = c.cohomology_dimension(k))
      out[k] = h;
  return out;
}

bool is_weak_equivalence(const CoalgebraMorphism &f, const Coderivation &q, const Coderivation &r,
                         int up_to) {
  if (auto n = intertwining_defect(f, q, r, up_to))
    throw StructuralError("morphism does not intertwine the structures at arity " + std::to_string(*n));
  const GradedSpace &src = f.source(), &tgt = f.target();
  const SymMap q1 = q.coefficient_or_zero(1), r1 = r.coefficient_or_zero(1);
  const SymMap f1 = f.coefficient(1) ? *f.coefficient(1) : SymMap(src, tgt, 1, 0);
  const auto h_src = cohomology_dimensions({src, q1});
  const auto h_tgt = cohomology_dimensions({tgt, r1});
  if (h_src != h_tgt)
    return false;
  for (const auto &[k, dim] : h_src) {
    // rank of H(f_1) in degree k: dim(f_1(Z_src) + B_tgt) - dim B_tgt
    EchelonBasis span;
    for (int g : tgt.basis_in_degree(k - 1))
      span.insert(to_sparse(r1.evaluate(Word{g})));
    const std::size_t boundaries = span.rank();
    for (const auto &z : cocycles(src, q1, k))
      span.insert(to_sparse(apply_linear(f1, z)));
    if (static_cast<int>(span.rank() - boundaries) != dim)
      return false;
  }
  return true;
}

} // namespace linf
