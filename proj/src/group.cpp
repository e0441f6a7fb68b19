#include "omega/group.hpp"

#include <stdexcept>

namespace omega {

const OperationDescriptor* OmegaGroup::find_operation(const std::string& symbol) const {
  for (const auto& op : operations()) {
    if (op.symbol == symbol) return &op;
  }
  return nullptr;
}

const OperationDescriptor& OmegaGroup::operation(const std::string& symbol) const {
  const OperationDescriptor* op = find_operation(symbol);
  if (op == nullptr) {
    throw std::invalid_argument("instance " + id() + " has no operation '" + symbol + "'");
  }
  return *op;
}

Ball::Ball(GroupPtr g, Value c, Scalar r, BallKind k)
    : group(std::move(g)), center(std::move(c)), radius(std::move(r)), kind(k) {
  if (radius.is_zero()) throw std::invalid_argument("Ball: radius must be positive");
}

bool Ball::contains(const Value& b) const {
  Scalar d = group->distance(center, b);
  return kind == BallKind::Open ? d < radius : d <= radius;
}

bool reverse_triangle_check(const OmegaGroup& g, const Value& a, const Value& b) {
  Scalar lhs = g.distance(a, b);
  Scalar rhs = abs_diff(g.norm(a).value(), g.norm(b).value());
  return lhs >= rhs;
}

}  // namespace omega
