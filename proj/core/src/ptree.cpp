#include <string>

#include "angulate/error.hpp"
#include "angulate/mobile.hpp"

namespace angulate {

PTree PTree::from_heights(int p, std::span<const int> heights) {
  if (p < 2) throw ParameterError("p-tree: p must be >= 2, got " + std::to_string(p));
  const std::size_t len = heights.size();
  if (len < static_cast<std::size_t>(p) + 1 || (len - 1) % static_cast<std::size_t>(p) != 0) {
    throw DecodeError("height sequence length " + std::to_string(len) +
                          " is not pn+1 for any n >= 1 with p=" + std::to_string(p),
                      len == 0 ? 0 : len - 1);
  }
  if (heights[0] != 0) throw DecodeError("height sequence must start at 0", 0);

  PTree t;
  t.p_ = p;
  t.n_ = static_cast<int>((len - 1) / static_cast<std::size_t>(p));
  t.heights_.assign(heights.begin(), heights.end());
  t.contour_.reserve(len);
  t.black_father_.reserve(t.n_);
  t.black_children_.assign(static_cast<std::size_t>(t.n_) * (p - 1), -1);
  t.white_father_.reserve(static_cast<std::size_t>(t.n_) * (p - 1) + 1);
  t.white_depth_.reserve(t.white_father_.capacity());

  std::vector<int> black_fill;  // children attached so far, per black vertex
  black_fill.reserve(t.n_);

  t.white_father_.push_back(-1);
  t.white_depth_.push_back(0);
  int current = 0;
  t.contour_.push_back(0);

  for (std::size_t i = 0; i + 1 < len; ++i) {
    const int step = heights[i + 1] - heights[i];
    const int father = t.white_father_[current];
    int next = -1;
    if (step == 2) {
      if (static_cast<int>(t.black_father_.size()) == t.n_) {
        throw DecodeError("more black vertices than the length allows", i);
      }
      const int b = static_cast<int>(t.black_father_.size());
      t.black_father_.push_back(current);
      black_fill.push_back(1);
      next = static_cast<int>(t.white_father_.size());
      t.white_father_.push_back(b);
      t.white_depth_.push_back(heights[i] + 2);
      t.black_children_[static_cast<std::size_t>(b) * (p - 1)] = next;
    } else if (step == 0) {
      if (father < 0) throw DecodeError("flat step at the root", i);
      if (black_fill[father] >= p - 1) {
        throw DecodeError("black vertex would exceed p-1 children", i);
      }
      next = static_cast<int>(t.white_father_.size());
      t.black_children_[static_cast<std::size_t>(father) * (p - 1) + black_fill[father]] = next;
      ++black_fill[father];
      t.white_father_.push_back(father);
      t.white_depth_.push_back(heights[i]);
    } else if (step == -2) {
      if (father < 0) throw DecodeError("height goes below 0", i);
      if (black_fill[father] != p - 1) {
        throw DecodeError("black vertex closed with fewer than p-1 children", i);
      }
      next = t.black_father_[father];
    } else {
      throw DecodeError("height step " + std::to_string(step) + " not in {-2,0,2}", i);
    }
    current = next;
    t.contour_.push_back(current);
  }
  if (current != 0) throw DecodeError("height sequence does not return to the root", len - 1);

  // Children of each white vertex, in creation order (left to right).
  const int whites = static_cast<int>(t.white_father_.size());
  t.white_child_offset_.assign(whites + 1, 0);
  for (int b = 0; b < t.n_; ++b) ++t.white_child_offset_[t.black_father_[b] + 1];
  for (int w = 0; w < whites; ++w) t.white_child_offset_[w + 1] += t.white_child_offset_[w];
  t.white_child_list_.assign(t.n_, 0);
  std::vector<int> fill(t.white_child_offset_.begin(), t.white_child_offset_.end() - 1);
  for (int b = 0; b < t.n_; ++b) t.white_child_list_[fill[t.black_father_[b]]++] = b;
  return t;
}

std::span<const int> PTree::black_children(int black) const {
  if (black < 0 || black >= n_) throw ParameterError("black vertex out of range");
  const auto k = static_cast<std::size_t>(p_ - 1);
  return std::span<const int>(black_children_).subspan(static_cast<std::size_t>(black) * k, k);
}

std::span<const int> PTree::white_children(int white) const {
  if (white < 0 || white >= white_count()) throw ParameterError("white vertex out of range");
  const auto first = static_cast<std::size_t>(white_child_offset_[white]);
  const auto last = static_cast<std::size_t>(white_child_offset_[white + 1]);
  return std::span<const int>(white_child_list_).subspan(first, last - first);
}

}  // namespace angulate
