#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "angulate/error.hpp"
#include "angulate/mobile.hpp"
#include "detail/white_tree.hpp"

namespace angulate {

namespace detail {

std::vector<int> heights_from_multipliers(int p, std::span<const int> multipliers) {
  const int whites = static_cast<int>(multipliers.size());
  // Preorder parse: each white i > 0 hangs below the deepest open ancestor.
  std::vector<int> offset(whites + 1, 0);
  for (int i = 0; i < whites; ++i) offset[i + 1] = offset[i] + multipliers[i] * (p - 1);
  std::vector<int> kids(static_cast<std::size_t>(offset[whites]));
  std::vector<int> fill(offset.begin(), offset.end() - 1);
  std::vector<int> open;
  open.reserve(64);
  if (whites > 0 && multipliers[0] > 0) open.push_back(0);
  for (int i = 1; i < whites; ++i) {
    const int parent = open.back();
    kids[fill[parent]++] = i;
    if (fill[parent] == offset[parent + 1]) open.pop_back();
    if (multipliers[i] > 0) open.push_back(i);
  }

  std::vector<int> heights;
  heights.reserve(static_cast<std::size_t>(offset[whites] / (p - 1) * p) + 1);

  // Task stack: white >= 0 visits that white at `depth`, white < 0 only
  // emits `depth` (the return to a parent after one of its black children).
  struct Task {
    int white;
    int depth;
  };
  std::vector<Task> tasks;
  tasks.push_back({0, 0});
  while (!tasks.empty()) {
    const Task t = tasks.back();
    tasks.pop_back();
    heights.push_back(t.depth);
    if (t.white < 0) continue;
    for (int slot = offset[t.white + 1] - 1; slot >= offset[t.white]; --slot) {
      if ((slot - offset[t.white]) % (p - 1) == p - 2) tasks.push_back({-1, t.depth});
      tasks.push_back({kids[slot], t.depth + 2});
    }
  }
  return heights;
}

}  // namespace detail

namespace {

// All (e_0..e_{p-1}) with e_j >= -1 summing to 0.
std::vector<std::vector<int>> cyclic_step_sequences(int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(p), 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == p - 1) {
      cur[j] = left - 1;
      out.push_back(cur);
      return;
    }
    for (int f = 0; f <= left; ++f) {
      cur[j] = f - 1;
      rec(j + 1, left - f);
    }
  };
  rec(0, p);
  return out;
}

void check_enumeration_size(int p, int n) {
  if (p < 2 || n < 1) throw ParameterError("enumeration needs p >= 2 and n >= 1");
  if (p * n > kEnumerationMaxEdges) {
    throw BudgetError("enumeration refused: pn = " + std::to_string(p * n) + " exceeds " +
                      std::to_string(kEnumerationMaxEdges));
  }
  const double space =
      count_ptrees(p, n) * std::pow(static_cast<double>(cyclic_step_count(p)), n);
  if (space > kEnumerationLimit) {
    throw BudgetError("enumeration refused: " + std::to_string(space) +
                      " label assignments exceed the limit");
  }
}

}  // namespace

std::vector<PTree> enumerate_ptrees(int p, int n) {
  if (p < 2 || n < 1) throw ParameterError("enumeration needs p >= 2 and n >= 1");
  if (p * n > kEnumerationMaxEdges) {
    throw BudgetError("enumeration refused: pn = " + std::to_string(p * n) + " exceeds " +
                      std::to_string(kEnumerationMaxEdges));
  }
  const int whites = (p - 1) * n + 1;
  std::vector<int> word(static_cast<std::size_t>(whites), 0);
  std::vector<PTree> trees;
  // Lukasiewicz words: partial sums of (p-1)m_i - 1 stay >= 0 until the last
  // letter, which brings the total to -1.
  std::function<void(int, int, int)> rec = [&](int i, int sum, int blacks_left) {
    if (i == whites) {
      if (blacks_left == 0 && sum == -1) {
        trees.push_back(PTree::from_heights(p, detail::heights_from_multipliers(p, word)));
      }
      return;
    }
    for (int m = 0; m <= blacks_left; ++m) {
      const int s = sum + (p - 1) * m - 1;
      if (s < 0 && i + 1 < whites) continue;
      word[i] = m;
      rec(i + 1, s, blacks_left - m);
    }
  };
  rec(0, 0, n);
  std::sort(trees.begin(), trees.end(), [](const PTree& a, const PTree& b) {
    return std::lexicographical_compare(a.heights().begin(), a.heights().end(),
                                        b.heights().begin(), b.heights().end());
  });
  return trees;
}

std::vector<Mobile> enumerate_mobiles(int p, int n, Variant variant) {
  check_enumeration_size(p, n);
  const auto steps = cyclic_step_sequences(p);
  const int root_label = variant == Variant::rooted ? 1 : 0;

  std::vector<std::pair<std::string, Mobile>> keyed;
  for (const PTree& tree : enumerate_ptrees(p, n)) {
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    std::vector<int> labels(static_cast<std::size_t>(tree.white_count()), 0);
    for (;;) {
      labels[0] = root_label;
      bool positive = true;
      for (int b = 0; b < n; ++b) {
        int running = labels[tree.black_father(b)];
        const auto kids = tree.black_children(b);
        const auto& e = steps[choice[b]];
        for (std::size_t j = 0; j < kids.size(); ++j) {
          running += e[j];
          labels[kids[j]] = running;
          if (running < 1) positive = false;
        }
      }
      if (variant == Variant::free || positive) {
        Mobile m(tree, labels, variant);
        keyed.emplace_back(contour(m).canonical(), std::move(m));
      }
      // Odometer over per-black choices.
      int b = n - 1;
      while (b >= 0 && ++choice[b] == steps.size()) choice[b--] = 0;
      if (b < 0) break;
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<Mobile> out;
  out.reserve(keyed.size());
  for (auto& [key, m] : keyed) out.push_back(std::move(m));
  return out;
}

}  // namespace angulate
