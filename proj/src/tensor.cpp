#include "htrans/tensor.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace htrans {

std::size_t TensorLayout::total() const {
  std::size_t p = 1;
  for (int n : orders) p *= static_cast<std::size_t>(n);
  return p;
}

std::size_t TensorLayout::flatten(std::span<const int> indices) const {
  if (indices.size() != orders.size())
    throw std::invalid_argument("TensorLayout::flatten: rank mismatch");
  std::size_t r = 0;
  std::size_t stride = 1;
  for (std::size_t l = 0; l < orders.size(); ++l) {
    if (indices[l] < 0 || indices[l] >= orders[l])
      throw std::out_of_range("TensorLayout::flatten: index " + std::to_string(indices[l]) +
                              " out of range for axis " + std::to_string(l));
    r += static_cast<std::size_t>(indices[l]) * stride;
    stride *= static_cast<std::size_t>(orders[l]);
  }
  return r;
}

std::vector<int> TensorLayout::unflatten(std::size_t r) const {
  if (r >= total())
    throw std::out_of_range("TensorLayout::unflatten: flat index out of range");
  std::vector<int> indices(orders.size());
  for (std::size_t l = 0; l < orders.size(); ++l) {
    indices[l] = static_cast<int>(r % static_cast<std::size_t>(orders[l]));
    r /= static_cast<std::size_t>(orders[l]);
  }
  return indices;
}

TensorOperator::TensorOperator(std::vector<int> orders, TransformDirection direction,
                               int order_cap)
    : direction_(direction) {
  if (orders.empty())
    throw std::invalid_argument("TensorOperator: at least one axis required");
  if (orders.size() > 4)
    throw std::invalid_argument("TensorOperator: more than 4 axes unsupported");
  layout_.orders = std::move(orders);

  std::map<int, std::shared_ptr<const LaplaceOperator>> cache;
  for (int n : layout_.orders) {
    auto& slot = cache[n];
    if (!slot)
      slot = std::make_shared<const LaplaceOperator>(
          build_laplace(build_fourier_matrix(basis_matrix(hermite_zeros(n, order_cap)))));
    axes_.push_back(slot);
  }
}

SampleVector TensorOperator::apply(const SampleVector& data) const {
  const std::size_t p = layout_.total();
  if (static_cast<std::size_t>(data.size()) != p)
    throw std::invalid_argument("TensorOperator::apply: length mismatch, expected " +
                                std::to_string(p));
  for (std::size_t i = 0; i < p; ++i)
    if (!std::isfinite(data(i).real()) || !std::isfinite(data(i).imag()))
      throw std::invalid_argument("TensorOperator::apply: non-finite entry at index " +
                                  std::to_string(i));

  SampleVector cur = data;
  SampleVector next(p);
  std::size_t stride_before = 1;
  for (std::size_t l = 0; l < layout_.orders.size(); ++l) {
    const std::size_t n = static_cast<std::size_t>(layout_.orders[l]);
    const Eigen::MatrixXcd& m = direction_ == TransformDirection::Forward
                                    ? axes_[l]->forward
                                    : axes_[l]->inverse;
    const std::size_t block = stride_before * n;
    const std::size_t blocks = p / block;
    for (std::size_t c = 0; c < blocks; ++c) {
      Eigen::Map<const Eigen::MatrixXcd> in(cur.data() + c * block, stride_before, n);
      Eigen::Map<Eigen::MatrixXcd> out(next.data() + c * block, stride_before, n);
      out = in * m.transpose();
    }
    cur.swap(next);
    stride_before *= n;
  }
  return cur;
}

SampleVector tensor_apply(const TensorOperator& op, const SampleVector& data) {
  return op.apply(data);
}

}  // namespace htrans
