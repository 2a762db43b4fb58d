#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace angulate {

// A p-tree: a rooted plane tree whose even-depth (white) vertices have any
// number of black children and whose odd-depth (black) vertices have exactly
// p-1 white children.
//
// White vertices are numbered 0..(p-1)n by first occurrence in the white
// search-depth sequence; vertex 0 is the root. Black vertices are numbered
// 0..n-1 by first occurrence in the depth-first traversal of the whole tree.
// The tree is immutable and fully determined by its height sequence.
class PTree {
 public:
  // Decodes a height sequence H (H_i = depth of the i-th white vertex in the
  // search-depth sequence, i.e. twice the contour function). Throws
  // DecodeError naming the first offending index.
  static PTree from_heights(int p, std::span<const int> heights);

  int p() const noexcept { return p_; }
  int black_count() const noexcept { return n_; }
  int white_count() const noexcept { return static_cast<int>(white_father_.size()); }
  // pn: number of tree edges, also the last contour index.
  int contour_length() const noexcept { return p_ * n_; }

  // H_0..H_pn.
  std::span<const int> heights() const noexcept { return heights_; }
  // v_0..v_pn as white indices.
  std::span<const int> contour() const noexcept { return contour_; }

  int black_father(int black) const { return black_father_.at(black); }
  std::span<const int> black_children(int black) const;
  // Black parent of a white vertex, -1 for the root.
  int white_father(int white) const { return white_father_.at(white); }
  std::span<const int> white_children(int white) const;
  int white_depth(int white) const { return white_depth_.at(white); }

  friend bool operator==(const PTree& a, const PTree& b) {
    return a.p_ == b.p_ && a.heights_ == b.heights_;
  }

 private:
  PTree() = default;

  int p_ = 2;
  int n_ = 0;
  std::vector<int> heights_;
  std::vector<int> contour_;
  std::vector<int> black_father_;
  std::vector<int> black_children_;  // (p-1) per black vertex
  std::vector<int> white_father_;
  std::vector<int> white_depth_;
  std::vector<int> white_child_offset_;  // CSR into white_child_list_
  std::vector<int> white_child_list_;
};

enum class Variant { rooted, free };

const char* to_string(Variant v) noexcept;
Variant parse_variant(const std::string& s);

// A p-tree with an integer label on every white vertex. Construction does
// not validate; see validate_mobile.
class Mobile {
 public:
  Mobile(PTree tree, std::vector<int> labels, Variant variant);

  const PTree& tree() const noexcept { return tree_; }
  std::span<const int> labels() const noexcept { return labels_; }
  int label(int white) const { return labels_.at(white); }
  Variant variant() const noexcept { return variant_; }
  int p() const noexcept { return tree_.p(); }
  int black_count() const noexcept { return tree_.black_count(); }

  friend bool operator==(const Mobile& a, const Mobile& b) {
    return a.variant_ == b.variant_ && a.labels_ == b.labels_ && a.tree_ == b.tree_;
  }

 private:
  PTree tree_;
  std::vector<int> labels_;
  Variant variant_;
};

// Paired contour sequences of a mobile, both of length pn+1: H (twice the
// contour function, so everything stays integral) and V (labels along the
// white search-depth sequence).
struct ContourPair {
  int p = 2;
  int n = 0;
  std::vector<int> heights;
  std::vector<int> labels;

  // "p n | H... | V..." - used as a total order and dedup key.
  std::string canonical() const;

  friend bool operator==(const ContourPair&, const ContourPair&) = default;
};

struct ScalingConstants {
  int p;
  double contour;  // (1/2) sqrt(p/(p-1))
  double label;    // (9 / (4p(p-1)))^(1/4)

  explicit ScalingConstants(int p);
};

enum class MobileViolationKind {
  size_mismatch,   // labels vector does not match the tree
  root_label,      // root label is not 1 (rooted) or 0 (free)
  positivity,      // a label < 1 in a rooted mobile
  cyclic_step,     // a step < -1 around a black vertex
};

struct MobileViolation {
  MobileViolationKind kind;
  int vertex;  // white vertex, or black vertex for cyclic_step
  std::string message;
};

struct MobileReport {
  std::vector<MobileViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

MobileReport validate_mobile(const Mobile& mobile);

// Throws ValidationError with the first violation if the mobile is invalid.
void require_valid(const Mobile& mobile);

ContourPair contour(const Mobile& mobile);

// Exact left inverse of contour(). Throws DecodeError for sequences that
// break the step/positivity constraints, ValidationError when the decoded
// labels violate the variant's conditions.
Mobile mobile_from_contour(const ContourPair& c, Variant variant);

// Number of p-trees with n black vertices: binom(pn, n) / ((p-1)n + 1).
double count_ptrees(int p, int n);

// All p-trees with n black vertices, in lexicographic order of heights.
std::vector<PTree> enumerate_ptrees(int p, int n);

// Every valid mobile of the given variant, sorted by canonical contour.
// Refuses (BudgetError) when pn > 24 or the label search space exceeds
// kEnumerationLimit assignments.
std::vector<Mobile> enumerate_mobiles(int p, int n, Variant variant);

inline constexpr int kEnumerationMaxEdges = 24;
inline constexpr double kEnumerationLimit = 1e7;

// Number of cyclic step sequences (e_0..e_{p-1}), e_j >= -1, sum 0:
// binom(2p-1, p-1).
std::int64_t cyclic_step_count(int p);

}  // namespace angulate
