#include "vnumlab/ring.hpp"

#include <algorithm>
#include <set>

#include "vnumlab/errors.hpp"

namespace vnumlab {

GradedRing::GradedRing(std::vector<std::string> names, std::vector<std::int64_t> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) {
    throw Error("invalid-ring", "variable and weight lists differ in length");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("invalid-ring", "empty variable name");
    if (!seen.insert(n).second) throw Error("invalid-ring", "duplicate variable name '" + n + "'");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) {
      throw Error("non-positive-weight",
                  "weight of '" + names_[i] + "' is " + std::to_string(weights_[i]));
    }
  }
}

GradedRing::GradedRing(std::vector<std::string> names)
    : GradedRing(names, std::vector<std::int64_t>(names.size(), 1)) {}

std::int64_t GradedRing::max_weight() const noexcept {
  if (weights_.empty()) return 0;
  return *std::max_element(weights_.begin(), weights_.end());
}

std::optional<std::size_t> GradedRing::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names, std::vector<std::int64_t> weights) {
  return std::make_shared<const GradedRing>(std::move(names), std::move(weights));
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const GradedRing>(std::move(names));
}

}  // namespace vnumlab
