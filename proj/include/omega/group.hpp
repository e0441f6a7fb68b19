#pragma once

#include <any>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "omega/scalar.hpp"

namespace omega {

// A carrier element. The payload type is owned by the instance that made
// it; callers only pass values back to the same instance.
using Value = std::any;

/// An n-ary operation, additive in each argument slot, with a declared
/// finite upper bound for its operation norm.
struct OperationDescriptor {
  std::string symbol;
  int arity = 0;
  Scalar norm_bound;
  std::function<Value(std::span<const Value>)> eval;
};

/// Abelian group with a family of polyadditive operations and an exact
/// rational-valued norm. All members must be pure; instances are immutable
/// and safe to share across threads.
class OmegaGroup {
 public:
  virtual ~OmegaGroup() = default;

  virtual const std::string& id() const = 0;
  virtual Value zero() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual bool equal(const Value& a, const Value& b) const = 0;
  virtual Scalar norm(const Value& a) const = 0;
  // Deterministic: the same seed yields the same element.
  virtual Value sample(std::uint64_t seed) const = 0;
  virtual const std::vector<OperationDescriptor>& operations() const = 0;
  virtual std::string format(const Value& a) const = 0;

  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  Scalar distance(const Value& a, const Value& b) const { return norm(sub(a, b)); }

  const OperationDescriptor* find_operation(const std::string& symbol) const;
  const OperationDescriptor& operation(const std::string& symbol) const;  // throws if absent
};

using GroupPtr = std::shared_ptr<const OmegaGroup>;

enum class BallKind { Open, Closed };

struct Ball {
  GroupPtr group;
  Value center;
  Scalar radius;
  BallKind kind = BallKind::Open;

  Ball(GroupPtr g, Value c, Scalar r, BallKind k = BallKind::Open);
  bool contains(const Value& b) const;
};

/// |a - b| >= | |a| - |b| |, evaluated exactly.
bool reverse_triangle_check(const OmegaGroup& g, const Value& a, const Value& b);

}  // namespace omega
