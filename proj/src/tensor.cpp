#include "lietriple/tensor.hpp"

#include <string>

#include "lietriple/errors.hpp"

namespace lietriple {

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  std::size_t n = 1;
  for (std::size_t s : shape_) n *= s;
  data_.resize(n);
}

std::size_t Tensor::offset(std::initializer_list<std::size_t> idx) const {
  if (idx.size() != shape_.size()) throw InputError("tensor index of wrong rank");
  std::size_t off = 0;
  std::size_t k = 0;
  for (std::size_t i : idx) {
    if (i >= shape_[k]) throw InputError("tensor index out of range");
    off = off * shape_[k++] + i;
  }
  return off;
}

std::size_t Tensor::offset(const std::vector<std::size_t>& idx) const {
  if (idx.size() != shape_.size()) throw InputError("tensor index of wrong rank");
  std::size_t off = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= shape_[k]) throw InputError("tensor index out of range");
    off = off * shape_[k] + idx[k];
  }
  return off;
}

std::vector<std::size_t> Tensor::index_of(std::size_t flat) const {
  std::vector<std::size_t> idx(shape_.size());
  for (std::size_t k = shape_.size(); k-- > 0;) {
    idx[k] = flat % shape_[k];
    flat /= shape_[k];
  }
  return idx;
}

}  // namespace lietriple
