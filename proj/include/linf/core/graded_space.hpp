#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linf {

struct Generator {
  std::string name;
  int degree = 0;

  friend bool operator==(const Generator &, const Generator &) = default;
};

/// Finite-dimensional Z-graded space with a distinguished ordered basis.
///
/// The order of the generator list is the canonical order used for every
/// monomial normal form. Copies share the (immutable) generator table.
class GradedSpace {
public:
  GradedSpace();
  explicit GradedSpace(std::vector<Generator> generators);

  std::size_t dim() const { return data_->generators.size(); }
  const std::vector<Generator> &generators() const { return data_->generators; }
  const Generator &generator(int index) const { return data_->generators.at(index); }
  int degree(int index) const { return data_->generators[static_cast<std::size_t>(index)].degree; }
  bool is_odd(int index) const { return degree(index) % 2 != 0; }
  const std::string &name(int index) const { return data_->generators.at(index).name; }

  std::optional<int> find(std::string_view name) const;
  /// Throws ArgumentError naming the generator when absent.
  int index_of(std::string_view name) const;

  /// Generators of the given degree, in canonical order.
  std::vector<int> basis_in_degree(int degree) const;
  /// Sorted list of degrees that occur.
  std::vector<int> degrees() const;

  /// The suspension V[k]: same generators, degree lowered by k.
  GradedSpace shifted(int k) const;

  friend bool operator==(const GradedSpace &a, const GradedSpace &b) {
    return a.data_ == b.data_ || a.data_->generators == b.data_->generators;
  }

private:
  struct Data {
    std::vector<Generator> generators;
  };
  std::shared_ptr<const Data> data_;
};

} // namespace linf
