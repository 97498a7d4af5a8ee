#pragma once

#include <memory>
#include <span>
#include <vector>

#include "htrans/laplace.hpp"

namespace htrans {

// Per-axis orders (N_1,...,N_n) with axis 0 the fastest-varying (innermost
// stride). The 0-based flat index r = j_1 + j_2 N_1 + j_3 N_1 N_2 + ...
// matches the 1-based ordering rule of the transform's flattening convention
// shifted by one.
struct TensorLayout {
  std::vector<int> orders;

  std::size_t total() const;
  std::size_t flatten(std::span<const int> indices) const;
  std::vector<int> unflatten(std::size_t r) const;
};

enum class TransformDirection { Forward, Inverse };

// Kronecker-product transform L_n (x) ... (x) L_1 over per-axis Laplace
// operators, applied as successive mode contractions at cost O(P sum N_l).
// The P x P matrix is never formed. Axes with equal orders share one
// operator. Immutable and shareable; apply() is pure.
class TensorOperator {
 public:
  TensorOperator(std::vector<int> orders, TransformDirection direction,
                 int order_cap = kDefaultOrderCap);

  const TensorLayout& layout() const { return layout_; }
  TransformDirection direction() const { return direction_; }
  int rank() const { return static_cast<int>(layout_.orders.size()); }
  const LaplaceOperator& axis_operator(int axis) const { return *axes_.at(axis); }

  SampleVector apply(const SampleVector& data) const;

 private:
  TensorLayout layout_;
  TransformDirection direction_;
  std::vector<std::shared_ptr<const LaplaceOperator>> axes_;
};

SampleVector tensor_apply(const TensorOperator& op, const SampleVector& data);

}  // namespace htrans
