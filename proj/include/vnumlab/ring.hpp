#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vnumlab {

/// Polynomial ring k[x_1..x_d] over a field with deg(x_i) = weight_i >= 1.
///
/// The coefficient field never enters monomial computations, so it is not
/// modelled. Rings are shared between ideals through RingPtr.
class GradedRing {
 public:
  /// Throws Error("invalid-ring") on empty/duplicate names or a size mismatch,
  /// and Error("non-positive-weight") on a weight below 1.
  GradedRing(std::vector<std::string> names, std::vector<std::int64_t> weights);

  /// All weights 1.
  explicit GradedRing(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::int64_t weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  std::int64_t max_weight() const noexcept;

  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const GradedRing&, const GradedRing&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> weights_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<std::int64_t> weights);
RingPtr make_ring(std::vector<std::string> names);

}  // namespace vnumlab
