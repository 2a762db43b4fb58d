#include <algorithm>
#include <string>

#include "angulate/dense_matrix.hpp"
#include "angulate/error.hpp"

namespace angulate {

void shortest_path_closure(DenseMatrix<int>& w) {
  const std::size_t n = w.size();
  if (n > kClosureMaxPoints) {
    throw BudgetError("shortest-path closure limited to " + std::to_string(kClosureMaxPoints) +
                      " points, got " + std::to_string(n) + "; use a smaller grid");
  }
  for (std::size_t i = 0; i < n; ++i) w(i, i) = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const int* rk = w.row(k).data();
    for (std::size_t i = 0; i < n; ++i) {
      int* ri = w.row(i).data();
      const int dik = ri[k];
      // Branch-free inner loop; vectorises.
      for (std::size_t j = 0; j < n; ++j) ri[j] = std::min(ri[j], dik + rk[j]);
    }
  }
}

}  // namespace angulate
