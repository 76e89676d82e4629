#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "spiraldet/errors.hpp"

namespace spiraldet {

/// Dense n x n matrix, row-major, 0-based.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T())
      : n_(n), cells_(n * n, fill) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
      : n_(rows.size()) {
    cells_.reserve(n_ * n_);
    for (const auto& r : rows) {
      if (r.size() != n_) throw LengthMismatch("matrix rows must be square");
      cells_.insert(cells_.end(), r.begin(), r.end());
    }
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return cells_[i * n_ + j];
  }

  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  /// Applies f to every cell, producing a matrix of the result type.
  template <class F>
  auto map(F&& f) const -> SquareMatrix<std::invoke_result_t<F, const T&>> {
    SquareMatrix<std::invoke_result_t<F, const T&>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw IndexOutOfRange("matrix index out of range");
  }

  std::size_t n_ = 0;
  std::vector<T> cells_;
};

}  // namespace spiraldet
