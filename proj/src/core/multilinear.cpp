#include "linf/core/multilinear.hpp"

#include <sstream>

#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"

namespace linf {

namespace {

void check_output_degree(const GradedSpace &source, const GradedSpace &target, int degree,
                         const Word &inputs, int out) {
  if (out < 0 || static_cast<std::size_t>(out) >= target.dim())
    throw ArgumentError("output generator index out of range");
  for (int g : inputs)
    if (g < 0 || static_cast<std::size_t>(g) >= source.dim())
      throw ArgumentError("input generator index out of range");
  const int expected = word_degree(source, inputs) + degree;
  if (target.degree(out) != expected)
    throw ArgumentError("non-homogeneous entry: " + format_word(source, inputs) + " -> " +
                        target.name(out) + " has degree " + std::to_string(target.degree(out)) +
                        ", expected " + std::to_string(expected));
}

void add_into(std::map<Word, Vector> &entries, const Word &key, int out, const Scalar &c) {
  auto &slot = entries[key];
  slot.add(out, c);
  if (slot.is_zero())
    entries.erase(key);
}

} // namespace

// ---------------------------------------------------------------- SymMap

SymMap::SymMap(GradedSpace source, GradedSpace target, int arity, int degree)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), degree_(degree) {
  if (arity < 1)
    throw ArgumentError("SymMap arity must be positive");
}

void SymMap::add(Word inputs, int out, const Scalar &c) {
  if (static_cast<int>(inputs.size()) != arity_)
    throw ArgumentError("SymMap::add: expected " + std::to_string(arity_) + " inputs");
  check_output_degree(source_, target_, degree_, inputs, out);
  if (c.is_zero())
    return;
  auto canon = canonicalize(source_, std::move(inputs));
  if (canon.sign == 0)
    return;
  add_into(entries_, canon.word, out, canon.sign > 0 ? c : -c);
}

void SymMap::add(Word inputs, const Vector &value) {
  for (const auto &[out, c] : value)
    add(inputs, out, c);
}

Vector SymMap::evaluate(std::span<const int> inputs) const {
  if (static_cast<int>(inputs.size()) != arity_)
    throw ArgumentError("SymMap::evaluate: arity " + std::to_string(arity_) + " map given " +
                        std::to_string(inputs.size()) + " inputs");
  auto canon = canonicalize(source_, Word(inputs.begin(), inputs.end()));
  if (canon.sign == 0)
    return {};
  auto it = entries_.find(canon.word);
  if (it == entries_.end())
    return {};
  return canon.sign > 0 ? it->second : -it->second;
}

Vector SymMap::evaluate(const SymElement &element) const {
  Vector out;
  for (const auto &[w, c] : element)
    out.add(evaluate(w), c);
  return out;
}

SymMap SymMap::scaled(const Scalar &factor) const {
  SymMap out(source_, target_, arity_, degree_);
  if (factor.is_zero())
    return out;
  for (const auto &[w, v] : entries_)
    out.entries_.emplace(w, v.scaled(factor));
  return out;
}

void SymMap::check_compatible(const SymMap &o) const {
  if (arity_ != o.arity_ || degree_ != o.degree_ || !(source_ == o.source_) ||
      !(target_ == o.target_))
    throw StructuralError("SymMap arithmetic on maps of different shape");
}

SymMap &SymMap::operator+=(const SymMap &o) {
  check_compatible(o);
  for (const auto &[w, v] : o.entries_)
    for (const auto &[out, c] : v)
      add_into(entries_, w, out, c);
  return *this;
}

SymMap &SymMap::operator-=(const SymMap &o) {
  check_compatible(o);
  for (const auto &[w, v] : o.entries_)
    for (const auto &[out, c] : v)
      add_into(entries_, w, out, -c);
  return *this;
}

bool operator==(const SymMap &a, const SymMap &b) {
  return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.source_ == b.source_ &&
         a.target_ == b.target_ && a.entries_ == b.entries_;
}

// ------------------------------------------------------------- TensorMap

TensorMap::TensorMap(GradedSpace source, GradedSpace target, int arity, int degree)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), degree_(degree) {
  if (arity < 1)
    throw ArgumentError("TensorMap arity must be positive");
}

void TensorMap::add(const Word &inputs, int out, const Scalar &c) {
  if (static_cast<int>(inputs.size()) != arity_)
    throw ArgumentError("TensorMap::add: expected " + std::to_string(arity_) + " inputs");
  check_output_degree(source_, target_, degree_, inputs, out);
  if (!c.is_zero())
    add_into(entries_, inputs, out, c);
}

void TensorMap::add(const Word &inputs, const Vector &value) {
  for (const auto &[out, c] : value)
    add(inputs, out, c);
}

Vector TensorMap::evaluate(std::span<const int> inputs) const {
  if (static_cast<int>(inputs.size()) != arity_)
    throw ArgumentError("TensorMap::evaluate: arity " + std::to_string(arity_) + " map given " +
                        std::to_string(inputs.size()) + " inputs");
  auto it = entries_.find(Word(inputs.begin(), inputs.end()));
  return it == entries_.end() ? Vector{} : it->second;
}

TensorMap TensorMap::scaled(const Scalar &factor) const {
  TensorMap out(source_, target_, arity_, degree_);
  if (factor.is_zero())
    return out;
  for (const auto &[w, v] : entries_)
    out.entries_.emplace(w, v.scaled(factor));
  return out;
}

void TensorMap::check_compatible(const TensorMap &o) const {
  if (arity_ != o.arity_ || degree_ != o.degree_ || !(source_ == o.source_) ||
      !(target_ == o.target_))
    throw StructuralError("TensorMap arithmetic on maps of different shape");
}

TensorMap &TensorMap::operator+=(const TensorMap &o) {
  check_compatible(o);
  for (const auto &[w, v] : o.entries_)
    for (const auto &[out, c] : v)
      add_into(entries_, w, out, c);
  return *this;
}

TensorMap &TensorMap::operator-=(const TensorMap &o) {
  check_compatible(o);
  for (const auto &[w, v] : o.entries_)
    for (const auto &[out, c] : v)
      add_into(entries_, w, out, -c);
  return *this;
}

bool operator==(const TensorMap &a, const TensorMap &b) {
  return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.source_ == b.source_ &&
         a.target_ == b.target_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------- helpers

Vector apply_linear(const SymMap &map, const Vector &v) {
  if (map.arity() != 1)
    throw ArgumentError("apply_linear needs an arity-1 map");
  Vector out;
  for (const auto &[g, c] : v) {
    auto it = map.entries().find(Word{g});
    if (it != map.entries().end())
      out.add(it->second, c);
  }
  return out;
}

Vector apply_linear(const TensorMap &map, const Vector &v) {
  if (map.arity() != 1)
    throw ArgumentError("apply_linear needs an arity-1 map");
  Vector out;
  for (const auto &[g, c] : v) {
    auto it = map.entries().find(Word{g});
    if (it != map.entries().end())
      out.add(it->second, c);
  }
  return out;
}

SymMap compose_linear(const SymMap &a, const SymMap &b) {
  if (a.arity() != 1 || b.arity() != 1)
    throw ArgumentError("compose_linear needs arity-1 maps");
  if (!(a.source() == b.target()))
    throw StructuralError("compose_linear: spaces do not match");
  SymMap out(b.source(), a.target(), 1, a.degree() + b.degree());
  for (const auto &[w, v] : b.entries())
    out.add(w, apply_linear(a, v));
  return out;
}

SymMap identity_map(const GradedSpace &space) {
  SymMap id(space, 1, 0);
  for (int g = 0; g < static_cast<int>(space.dim()); ++g)
    id.add({g}, g, Scalar(1));
  return id;
}

TensorMap to_tensor(const SymMap &map) {
  TensorMap out(map.source(), map.target(), map.arity(), map.degree());
  for (const auto &w : tensor_words(map.source(), map.arity())) {
    auto v = map.evaluate(w);
    if (!v.is_zero())
      out.add(w, v);
  }
  return out;
}

std::optional<Word> symmetry_violation(const TensorMap &map) {
  const auto &space = map.source();
  for (const auto &w : tensor_words(space, map.arity())) {
    auto canon = canonicalize(space, w);
    Vector expected;
    if (canon.sign != 0) {
      expected = map.evaluate(canon.word);
      if (canon.sign < 0)
        expected = -expected;
    }
    if (!(map.evaluate(w) == expected))
      return w;
  }
  return std::nullopt;
}

SymMap to_symmetric(const TensorMap &map) {
  if (auto bad = symmetry_violation(map))
    throw ArgumentError("map is not graded symmetric on " + format_word(map.source(), *bad, ","));
  SymMap out(map.source(), map.target(), map.arity(), map.degree());
  for (const auto &w : symmetric_monomials(map.source(), map.arity())) {
    auto v = map.evaluate(w);
    if (!v.is_zero())
      out.add(w, v);
  }
  return out;
}

std::optional<int> homogeneous_degree(const GradedSpace &space, const Vector &v) {
  std::optional<int> d;
  for (const auto &[g, c] : v) {
    if (d && *d != space.degree(g))
      return std::nullopt;
    d = space.degree(g);
  }
  return d;
}

std::string format_vector(const GradedSpace &space, const Vector &v) {
  if (v.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[g, c] : v) {
    if (!first)
      os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0)
      os << "-";
    first = false;
    Scalar mag = c.sign() < 0 ? -c : c;
    if (!(mag == Scalar(1)))
      os << mag << "*";
    os << space.name(g);
  }
  return os.str();
}

std::string format_word(const GradedSpace &space, const Word &w, const char *sep) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += sep;
    out += space.name(w[i]);
  }
  return out;
}

} // namespace linf
