#include "linf/core/decalage.hpp"

#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"

namespace linf {

int decalage_sign(const GradedSpace &unshifted, const Word &inputs) {
  const long n = static_cast<long>(inputs.size());
  long e = 0;
  for (long j = 0; j < n; ++j)
    e += (n - 1 - j) * (unshifted.degree(inputs[static_cast<std::size_t>(j)]) - 1);
  return -parity_sign(e);
}

SymMap decalage_down(const TensorMap &l) {
  if (!(l.source() == l.target()))
    throw ArgumentError("decalage_down expects an endomorphism-type map");
  const GradedSpace &unshifted = l.source();
  const GradedSpace shifted = unshifted.shifted(1);
  const int n = l.arity();

  TensorMap image(shifted, n, l.degree() + n - 1);
  for (const auto &w : tensor_words(unshifted, n)) {
    auto v = l.evaluate(w);
    if (!v.is_zero())
      image.add(w, v.scaled(Scalar(decalage_sign(unshifted, w))));
  }
  // graded antisymmetry of l on L is graded symmetry of the image on L[1]
  if (auto bad = symmetry_violation(image))
    throw ArgumentError("decalage_down: map is not graded antisymmetric on " +
                        format_word(unshifted, *bad, ","));
  return to_symmetric(image);
}

TensorMap decalage_up(const SymMap &q) {
  if (!(q.source() == q.target()))
    throw ArgumentError("decalage_up expects an endomorphism-type map");
  const GradedSpace unshifted = q.source().shifted(-1);
  const int n = q.arity();
  TensorMap out(unshifted, n, q.degree() - n + 1);
  for (const auto &w : tensor_words(q.source(), n)) {
    auto v = q.evaluate(w);
    if (!v.is_zero())
      out.add(w, v.scaled(Scalar(decalage_sign(unshifted, w))));
  }
  return out;
}

} // namespace linf
