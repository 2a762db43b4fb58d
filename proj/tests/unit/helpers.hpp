#pragma once

#include <vector>

#include "angulate/mobile.hpp"
#include "angulate/planar_map.hpp"

namespace angulate::testing {

// p = 2, n = 1 rooted mobile whose white child has the given label.
inline Mobile single_face(int child_label, Variant v = Variant::rooted) {
  ContourPair c;
  c.p = 2;
  c.n = 1;
  c.heights = {0, 2, 0};
  const int root = v == Variant::rooted ? 1 : 0;
  c.labels = {root, child_label, root};
  return mobile_from_contour(c, v);
}

// The p = 3, n = 5 mobile of the worked figure: a 6-angulation with 5 faces.
inline ContourPair figure_contour() {
  ContourPair c;
  c.p = 3;
  c.n = 5;
  c.heights = {0, 2, 4, 6, 6, 4, 4, 6, 6, 4, 2, 2, 0, 2, 2, 0};
  c.labels = {1, 3, 4, 3, 2, 4, 3, 2, 1, 3, 3, 2, 1, 1, 2, 1};
  return c;
}

inline Mobile figure_mobile() { return mobile_from_contour(figure_contour(), Variant::rooted); }

// Rooted maps with n faces of degree 2p: 2 C_p(n) binom(2p-1, p-1)^n / ((p-1)n + 2).
inline double rooted_map_count(int p, int n) {
  double b = 1;
  for (int i = 0; i < n; ++i) b *= static_cast<double>(cyclic_step_count(p));
  return 2 * count_ptrees(p, n) * b / ((p - 1) * n + 2);
}

}  // namespace angulate::testing
