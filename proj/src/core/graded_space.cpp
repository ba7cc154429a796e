#include "linf/core/graded_space.hpp"

#include <algorithm>
#include <set>

#include "linf/core/errors.hpp"

namespace linf {

GradedSpace::GradedSpace() : data_(std::make_shared<const Data>()) {}

GradedSpace::GradedSpace(std::vector<Generator> generators) {
  std::set<std::string> seen;
  for (const auto &g : generators) {
    if (g.name.empty())
      throw ArgumentError("generator name must be non-empty");
    if (!seen.insert(g.name).second)
      throw ArgumentError("duplicate generator name \"" + g.name + "\"");
  }
  data_ = std::make_shared<const Data>(Data{std::move(generators)});
}

std::optional<int> GradedSpace::find(std::string_view name) const {
  const auto &gens = data_->generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name)
      return static_cast<int>(i);
  return std::nullopt;
}

int GradedSpace::index_of(std::string_view name) const {
  if (auto i = find(name))
    return *i;
  throw ArgumentError("unknown generator \"" + std::string(name) + "\"");
}

std::vector<int> GradedSpace::basis_in_degree(int deg) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (data_->generators[i].degree == deg)
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> GradedSpace::degrees() const {
  std::set<int> ds;
  for (const auto &g : data_->generators)
    ds.insert(g.degree);
  return {ds.begin(), ds.end()};
}

GradedSpace GradedSpace::shifted(int k) const {
  auto gens = data_->generators;
  for (auto &g : gens)
    g.degree -= k;
  return GradedSpace(std::move(gens));
}

} // namespace linf
