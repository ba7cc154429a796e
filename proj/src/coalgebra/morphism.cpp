#include "linf/coalgebra/morphism.hpp"

#include <algorithm>

#include "linf/core/errors.hpp"
#include "linf/core/linalg.hpp"
#include "linf/core/permutation.hpp"

namespace linf {

CoalgebraMorphism::CoalgebraMorphism(GradedSpace source, GradedSpace target, int truncation)
    : source_(std::move(source)), target_(std::move(target)), truncation_(truncation) {
  if (truncation < 1)
    throw ArgumentError("morphism truncation must be at least 1");
}

const SymMap *CoalgebraMorphism::coefficient(int arity) const {
  auto it = taylor_.find(arity);
  return it == taylor_.end() ? nullptr : &it->second;
}

void CoalgebraMorphism::set_coefficient(SymMap f) {
  if (!(f.source() == source_) || !(f.target() == target_))
    throw StructuralError("morphism coefficient between the wrong spaces");
  if (f.degree() != 0)
    throw ArgumentError("morphism coefficients have degree 0");
  if (f.arity() > truncation_)
    throw ArgumentError("morphism coefficient beyond truncation");
  const int n = f.arity();
  if (f.is_zero())
    taylor_.erase(n);
  else
    taylor_.insert_or_assign(n, std::move(f));
}

CoalgebraMorphism CoalgebraMorphism::identity(const GradedSpace &space) {
  return linear(identity_map(space));
}

CoalgebraMorphism CoalgebraMorphism::linear(const SymMap &map) {
  if (map.arity() != 1)
    throw ArgumentError("linear morphism needs an arity-1 map");
  CoalgebraMorphism f(map.source(), map.target());
  f.set_coefficient(map);
  return f;
}

namespace {

bool is_linear(const CoalgebraMorphism &f) {
  return std::all_of(f.taylor().begin(), f.taylor().end(),
                     [](const auto &kv) { return kv.first == 1; });
}

CoalgebraMorphism truncate(const CoalgebraMorphism &f, int n) {
  CoalgebraMorphism out(f.source(), f.target(), std::min(f.truncation(), n));
  for (const auto &[k, fk] : f.taylor())
    if (k <= out.truncation())
      out.set_coefficient(fk);
  return out;
}

// Σ_k g_k(e^{(k)}), the corestriction of G applied to e.
Vector project(const CoalgebraMorphism &g, const SymElement &e) {
  Vector acc;
  for (const auto &[u, c] : e)
    if (const auto *gk = g.coefficient(static_cast<int>(u.size())))
      acc.add(gk->evaluate(u), c);
  return acc;
}

} // namespace

SymElement apply_morphism(const CoalgebraMorphism &f, const Word &monomial) {
  const GradedSpace &src = f.source();
  auto canon = canonicalize(src, monomial);
  if (canon.sign == 0)
    return {};
  const Word &w = canon.word;
  const int n = static_cast<int>(w.size());
  if (n == 0)
    return SymElement(Word{}, Scalar(1));
  if (n > f.truncation())
    throw PreconditionError("apply: monomial longer than the morphism truncation");

  std::vector<int> degs;
  for (int g : w)
    degs.push_back(src.degree(g));

  SymElement out;
  for (const auto &partition : set_partitions(n)) {
    Permutation sigma;
    bool vanishes = false;
    for (const auto &block : partition) {
      if (!f.coefficient(static_cast<int>(block.size()))) {
        vanishes = true;
        break;
      }
      sigma.insert(sigma.end(), block.begin(), block.end());
    }
    if (vanishes)
      continue;
    SymElement product(Word{}, Scalar(canon.sign * koszul_sign(sigma, degs)));
    for (const auto &block : partition) {
      Word sub;
      for (int p : block)
        sub.push_back(w[static_cast<std::size_t>(p)]);
      Vector value = f.coefficient(static_cast<int>(block.size()))->evaluate(sub);
      SymElement next;
      for (const auto &[u, c] : product)
        for (const auto &[t, d] : value) {
          auto m = multiply_words(f.target(), u, Word{t});
          if (m.sign != 0)
            next.add(m.word, c * d * Scalar(m.sign));
        }
      product = std::move(next);
      if (product.is_zero())
        break;
    }
    out += product;
  }
  return out;
}

SymElement apply_morphism(const CoalgebraMorphism &f, const SymElement &element) {
  SymElement out;
  for (const auto &[w, c] : element)
    out.add(apply_morphism(f, w), c);
  return out;
}

CoalgebraMorphism compose(const CoalgebraMorphism &g, const CoalgebraMorphism &f) {
  if (!(f.target() == g.source()))
    throw StructuralError("compose: target of F is not the source of G");
  int n_max = std::min(f.truncation(), g.truncation());
  if (n_max >= kExact) {
    if (!is_linear(f) || !is_linear(g))
      throw PreconditionError("compose: non-linear morphisms need a finite truncation");
    n_max = 1;
  }
  CoalgebraMorphism out(f.source(), g.target(), std::min(f.truncation(), g.truncation()));
  for (int n = 1; n <= n_max; ++n) {
    SymMap h(f.source(), g.target(), n, 0);
    for (const auto &w : symmetric_monomials(f.source(), n))
      h.add(w, project(g, apply_morphism(f, w)));
    out.set_coefficient(std::move(h));
  }
  return out;
}

CoalgebraMorphism invert(const CoalgebraMorphism &f) {
  const GradedSpace &src = f.source(), &tgt = f.target();
  if (src.dim() != tgt.dim())
    throw InversionError("linear coefficient is not square");
  const std::size_t dim = src.dim();
  DenseMatrix m(dim, dim);
  if (const auto *f1 = f.coefficient(1))
    for (std::size_t s = 0; s < dim; ++s)
      for (const auto &[t, c] : f1->evaluate(Word{static_cast<int>(s)}))
        m(static_cast<std::size_t>(t), s) = c;
  DenseMatrix minv = m.inverse();

  if (f.truncation() >= kExact && !is_linear(f))
    throw PreconditionError("invert: non-linear morphism needs a finite truncation");
  CoalgebraMorphism g(tgt, src, f.truncation());
  SymMap g1(tgt, src, 1, 0);
  for (std::size_t t = 0; t < dim; ++t)
    for (std::size_t s = 0; s < dim; ++s)
      if (!minv(s, t).is_zero()) {
        if (src.degree(static_cast<int>(s)) != tgt.degree(static_cast<int>(t)))
          throw InversionError("linear coefficient does not preserve degrees");
        g1.add(Word{static_cast<int>(t)}, static_cast<int>(s), minv(s, t));
      }
  g.set_coefficient(g1);
  if (is_linear(f))
    return g;

  const CoalgebraMorphism lin = CoalgebraMorphism::linear(g1);
  for (int n = 2; n <= f.truncation(); ++n) {
    SymMap gn(tgt, src, n, 0);
    for (const auto &u : symmetric_monomials(tgt, n)) {
      SymElement fw = apply_morphism(f, apply_morphism(lin, u));
      Vector acc;
      for (const auto &[x, c] : fw) {
        const int k = static_cast<int>(x.size());
        if (k >= n)
          continue;
        if (const auto *gk = g.coefficient(k))
          acc.add(gk->evaluate(x), -c);
      }
      if (!acc.is_zero())
        gn.add(u, acc);
    }
    g.set_coefficient(std::move(gn));
  }
  return g;
}

Coderivation conjugate(const CoalgebraMorphism &f, const Coderivation &r) {
  if (!(r.space() == f.target()))
    throw StructuralError("conjugate: coderivation does not live on the target of F");
  const bool nonreduced = r.variant() == Variant::nonreduced;
  int n_out = std::min(truncation_add(f.truncation(), nonreduced ? -1 : 0), r.truncation());
  if (n_out >= kExact) {
    if (!is_linear(f))
      throw PreconditionError("conjugate: needs a finite truncation");
    n_out = std::max(r.top_arity(), 1);
  }
  const CoalgebraMorphism ft = f.truncation() >= kExact ? f : truncate(f, n_out + (nonreduced ? 1 : 0));
  const CoalgebraMorphism g = invert(ft);
  Coderivation out = corestrict(f.source(), r.variant(), r.degree(), n_out, [&](const Word &w) {
    return apply_morphism(g, expand(r, apply_morphism(ft, w)));
  });
  if (!(r.is_exact() && f.truncation() >= kExact))
    return out;
  Coderivation exact(out.space(), out.variant(), out.degree());
  exact.set_unit_image(out.unit_image());
  for (const auto &[k, qk] : out.taylor())
    exact.set_coefficient(qk);
  return exact;
}

std::optional<int> intertwining_defect(const CoalgebraMorphism &f, const Coderivation &q,
                                       const Coderivation &r, int up_to) {
  if (!(q.space() == f.source()) || !(r.space() == f.target()))
    throw StructuralError("intertwining_defect: spaces do not match the morphism");
  for (int n = 1; n <= up_to; ++n)
    for (const auto &w : symmetric_monomials(f.source(), n)) {
      Vector lhs = project(f, expand(q, w));
      Vector rhs;
      for (const auto &[u, c] : apply_morphism(f, w))
        rhs.add(r.evaluate(u), c);
      if (!(lhs == rhs))
        return n;
    }
  return std::nullopt;
}

} // namespace linf
