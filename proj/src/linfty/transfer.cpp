#include "linf/linfty/transfer.hpp"

#include "linf/core/errors.hpp"
#include "linf/core/linalg.hpp"
#include "linf/core/permutation.hpp"
#include "linf/linfty/linfty.hpp"

namespace linf {

namespace {

struct DegreeSplit {
  std::vector<int> basis;          // generators of V in this degree
  std::vector<Vector> boundaries;  // b_j = q_1(c_j) for c_j in the previous degree
  std::vector<Vector> harmonic;    // cohomology representatives
  std::vector<int> harmonic_names; // generator whose name each representative takes
  std::vector<Vector> complement;  // c_j: q_1 is injective on their span
};

DenseMatrix matrix_of(const SymMap &map, const std::vector<int> &cols, const std::vector<int> &rows) {
  DenseMatrix m(rows.size(), cols.size());
  std::map<int, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i)
    row_of[rows[i]] = i;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto &[g, c] : map.evaluate(Word{cols[j]}))
      m(row_of.at(g), j) = c;
  return m;
}

SparseVec sparse(const Vector &v) { return SparseVec(v.begin(), v.end()); }

} // namespace

Contraction contraction_from_cohomology(const GradedSpace &space, const SymMap &q1) {
  if (q1.arity() != 1 || q1.degree() != 1 || !(q1.source() == space))
    throw ArgumentError("contraction needs a degree-1 linear differential on the space");
  for (int g = 0; g < static_cast<int>(space.dim()); ++g)
    if (!apply_linear(q1, apply_linear(q1, Vector(g, Scalar(1)))).is_zero())
      throw PreconditionError("contraction: q_1 does not square to zero");

  std::map<int, DegreeSplit> split;
  for (int k : space.degrees())
    split[k].basis = space.basis_in_degree(k);

  // complements C^k and boundaries B^{k+1}
  for (auto &[k, s] : split) {
    auto next = space.basis_in_degree(k + 1);
    auto [r, pivots] = matrix_of(q1, s.basis, next).rref();
    for (std::size_t p : pivots) {
      Vector c(s.basis[p], Scalar(1));
      s.complement.push_back(c);
      split[k + 1].boundaries.push_back(apply_linear(q1, c));
    }
  }
  // cohomology representatives: extend B^k inside Z^k
  for (auto &[k, s] : split) {
    auto next = space.basis_in_degree(k + 1);
    DenseMatrix m = matrix_of(q1, s.basis, next);
    auto [r, pivots] = m.rref();
    std::vector<bool> is_pivot(s.basis.size(), false);
    for (auto p : pivots)
      is_pivot[p] = true;
    EchelonBasis span;
    for (const auto &b : s.boundaries)
      span.insert(sparse(b));
    auto null = m.nullspace();
    std::size_t free_index = 0;
    for (std::size_t col = 0; col < s.basis.size(); ++col) {
      if (is_pivot[col])
        continue;
      const auto &nv = null[free_index++];
      Vector z;
      for (std::size_t j = 0; j < nv.size(); ++j)
        z.add(s.basis[j], nv[j]);
      if (span.insert(sparse(z))) {
        s.harmonic.push_back(z);
        s.harmonic_names.push_back(s.basis[col]);
      }
    }
  }

  std::vector<Generator> h_gens;
  std::map<int, int> h_index; // V generator naming the class -> index in H
  for (int g = 0; g < static_cast<int>(space.dim()); ++g)
    for (const auto &[k, s] : split)
      for (int name : s.harmonic_names)
        if (name == g) {
          h_index[g] = static_cast<int>(h_gens.size());
          h_gens.push_back(space.generator(g));
        }
  GradedSpace h(std::move(h_gens));

  Contraction out{h, SymMap(h, space, 1, 0), SymMap(space, h, 1, 0), SymMap(space, 1, -1)};
  for (const auto &[k, s] : split) {
    const std::size_t nb = s.boundaries.size(), nh = s.harmonic.size(), nc = s.complement.size();
    if (nb + nh + nc != s.basis.size())
      throw InternalConsistencyError("contraction: B ⊕ H ⊕ C does not fill degree " + std::to_string(k));
    std::vector<Vector> columns = s.boundaries;
    columns.insert(columns.end(), s.harmonic.begin(), s.harmonic.end());
    columns.insert(columns.end(), s.complement.begin(), s.complement.end());
    DenseMatrix m(s.basis.size(), s.basis.size());
    std::map<int, std::size_t> row_of;
    for (std::size_t i = 0; i < s.basis.size(); ++i)
      row_of[s.basis[i]] = i;
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto &[g, c] : columns[j])
        m(row_of.at(g), j) = c;
    DenseMatrix inv = m.inverse();

    for (std::size_t j = 0; j < nh; ++j)
      out.inclusion.add(Word{h_index.at(s.harmonic_names[j])}, s.harmonic[j]);
    const auto &prev_complement = split.count(k - 1) ? split.at(k - 1).complement : std::vector<Vector>{};
    for (std::size_t col = 0; col < s.basis.size(); ++col) {
      const int g = s.basis[col];
      Vector pv, hv;
      for (std::size_t j = 0; j < nh; ++j)
        pv.add(h_index.at(s.harmonic_names[j]), inv(nb + j, col));
      for (std::size_t j = 0; j < nb; ++j)
        hv.add(prev_complement[j], inv(j, col));
      out.projection.add(Word{g}, pv);
      out.homotopy.add(Word{g}, hv);
    }
  }
  if (auto bad = contraction_violation(q1, out))
    throw InternalConsistencyError("contraction identity fails: " + *bad);
  return out;
}

std::optional<std::string> contraction_violation(const SymMap &q1, const Contraction &c) {
  const GradedSpace &v = q1.source();
  const GradedSpace &h = c.cohomology;
  if (!(c.inclusion.source() == h) || !(c.inclusion.target() == v) || !(c.projection.source() == v) ||
      !(c.projection.target() == h) || !(c.homotopy.source() == v) || !(c.homotopy.target() == v))
    return "spaces";
  for (int x = 0; x < static_cast<int>(h.dim()); ++x) {
    Vector e(x, Scalar(1));
    Vector ie = apply_linear(c.inclusion, e);
    if (!(apply_linear(c.projection, ie) == e))
      return "p i = id";
    if (!apply_linear(c.homotopy, ie).is_zero())
      return "h i = 0";
    if (!apply_linear(q1, ie).is_zero())
      return "i lands in cocycles";
  }
  for (int x = 0; x < static_cast<int>(v.dim()); ++x) {
    Vector e(x, Scalar(1));
    Vector he = apply_linear(c.homotopy, e);
    if (!apply_linear(c.homotopy, he).is_zero())
      return "h h = 0";
    if (!apply_linear(c.projection, he).is_zero())
      return "p h = 0";
    Vector lhs = e - apply_linear(c.inclusion, apply_linear(c.projection, e));
    Vector rhs = apply_linear(q1, he) + apply_linear(c.homotopy, apply_linear(q1, e));
    if (!(lhs == rhs))
      return "id - i p = q_1 h + h q_1";
  }
  return std::nullopt;
}

std::optional<int> TransferResult::lowest_nonzero() const {
  for (const auto &[n, r] : minimal.taylor())
    if (n >= 2)
      return n;
  return std::nullopt;
}

TransferResult transfer(const Coderivation &q, const Contraction &c, int max_arity) {
  if (q.variant() != Variant::reduced || q.degree() != 1)
    throw ArgumentError("transfer expects a reduced degree-1 structure");
  if (q.truncation() < max_arity)
    throw PreconditionError("transfer: structure known up to arity " + std::to_string(q.truncation()));
  const SymMap q1 = q.coefficient_or_zero(1);
  if (auto bad = contraction_violation(q1, c))
    throw PreconditionError("transfer: invalid contraction (" + *bad + ")");
  require_linfty(q, max_arity, "transfer");

  const GradedSpace &h = c.cohomology;
  Coderivation r(h, Variant::reduced, 1, max_arity);
  CoalgebraMorphism f(h, q.space(), max_arity);
  f.set_coefficient(c.inclusion);

  for (int n = 2; n <= max_arity; ++n) {
    SymMap rn(h, n, 1);
    SymMap fn(h, q.space(), n, 0);
    for (const auto &w : symmetric_monomials(h, n)) {
      Vector phi;
      for (const auto &[u, coeff] : apply_morphism(f, w))
        if (u.size() >= 2)
          phi.add(q.evaluate(u), coeff);
      for (const auto &[u, coeff] : expand(r, w)) {
        const int j = static_cast<int>(u.size());
        if (j >= 2 && j < n)
          if (const auto *fj = f.coefficient(j))
            phi.add(fj->evaluate(u), -coeff);
      }
      if (phi.is_zero())
        continue;
      rn.add(w, apply_linear(c.projection, phi));
      fn.add(w, apply_linear(c.homotopy, phi).scaled(Scalar(-1)));
    }
    r.set_coefficient(std::move(rn));
    f.set_coefficient(std::move(fn));
  }

  if (auto bad = check_linfty(r, max_arity).lowest_failure())
    throw InternalConsistencyError("transferred structure fails R•R = 0 at arity " + std::to_string(*bad));
  if (auto bad = intertwining_defect(f, r, q, max_arity))
    throw InternalConsistencyError("transfer morphism fails F R = Q F at arity " + std::to_string(*bad));
  return {c, std::move(r), std::move(f)};
}

} // namespace linf
