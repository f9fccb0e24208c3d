#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lietriple/exactla.hpp"

namespace lietriple {

// Dense coefficient array with row-major multi-index.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  const Vector& data() const { return data_; }
  Vector& data() { return data_; }

  template <class... I>
  Rational& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const Rational& operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  Rational& at(const std::vector<std::size_t>& idx) { return data_[offset(idx)]; }
  const Rational& at(const std::vector<std::size_t>& idx) const { return data_[offset(idx)]; }

  std::vector<std::size_t> index_of(std::size_t flat) const;
  bool is_zero() const { return lietriple::is_zero(data_); }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(std::initializer_list<std::size_t> idx) const;
  std::size_t offset(const std::vector<std::size_t>& idx) const;

  std::vector<std::size_t> shape_;
  Vector data_;
};

// Calls fn(tuple) for every tuple in {0..n-1}^arity in lexicographic order.
template <class Fn>
void for_each_tuple(std::size_t arity, std::size_t n, Fn&& fn) {
  std::vector<std::size_t> t(arity, 0);
  if (arity > 0 && n == 0) return;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(t));
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++t[k] < n) break;
      t[k] = 0;
      if (k == 0) return;
    }
    if (arity == 0) return;
  }
}

}  // namespace lietriple
