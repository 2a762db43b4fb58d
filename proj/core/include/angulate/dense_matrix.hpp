#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace angulate {

// Row-major square matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t size, T fill = T{})
      : size_(size), data_(size * size, fill) {}

  std::size_t size() const noexcept { return size_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * size_, size_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * size_, size_}; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<T> data_;
};

// In-place all-pairs shortest-path closure (Floyd-Warshall, min-plus) of a
// complete graph with nonnegative integer weights. The diagonal is set to 0
// first: a chain of length zero costs nothing.
void shortest_path_closure(DenseMatrix<int>& weights);

// Largest grid the closure accepts (points, not intervals).
inline constexpr std::size_t kClosureMaxPoints = 1025;

}  // namespace angulate
