#include "angulate/sampler.hpp"

#include <string>
#include <vector>

#include "angulate/error.hpp"
#include "detail/white_tree.hpp"

namespace angulate {

namespace {

void check_size(int p, int n) {
  if (p < 2) throw ParameterError("p must be >= 2, got " + std::to_string(p));
  if (n < 1) throw ParameterError("number of faces must be >= 1, got " + std::to_string(n));
}

// Uniform composition of `total` into `parts` nonnegative parts: choose the
// parts-1 bar positions among total+parts-1 slots by selection sampling.
void sample_composition(int total, int parts, RngStream& rng, std::vector<int>& out) {
  out.assign(static_cast<std::size_t>(parts), 0);
  const std::int64_t slots = static_cast<std::int64_t>(total) + parts - 1;
  std::int64_t bars_left = parts - 1;
  int part = 0;
  for (std::int64_t s = 0; s < slots; ++s) {
    const auto remaining = static_cast<std::uint64_t>(slots - s);
    if (static_cast<std::int64_t>(rng.uniform_below(remaining)) < bars_left) {
      --bars_left;
      ++part;
    } else {
      ++out[part];
    }
  }
}

std::vector<int> sample_lukasiewicz(int p, int n, RngStream& rng) {
  const int whites = (p - 1) * n + 1;
  std::vector<int> m;
  sample_composition(n, whites, rng, m);
  // Cycle lemma: start right after the first position where the partial sums
  // of (p-1)m_i - 1 reach their minimum.
  long long sum = 0;
  long long best = 1;
  int argmin = 0;
  for (int i = 0; i < whites; ++i) {
    sum += static_cast<long long>(p - 1) * m[i] - 1;
    if (sum < best) {
      best = sum;
      argmin = i;
    }
  }
  std::vector<int> word(static_cast<std::size_t>(whites));
  for (int i = 0; i < whites; ++i) word[i] = m[(argmin + 1 + i) % whites];
  return word;
}

// Fills labels for a fixed tree starting from `root_label`. When
// `require_positive` is set, stops early and returns false on the first
// label below 1.
bool sample_labels(const PTree& tree, int root_label, bool require_positive, RngStream& rng,
                   std::vector<int>& labels, std::vector<int>& steps) {
  const int p = tree.p();
  labels.assign(static_cast<std::size_t>(tree.white_count()), 0);
  labels[0] = root_label;
  for (int b = 0; b < tree.black_count(); ++b) {
    sample_composition(p, p, rng, steps);
    int running = labels[tree.black_father(b)];
    const auto kids = tree.black_children(b);
    for (std::size_t j = 0; j < kids.size(); ++j) {
      running += steps[j] - 1;
      if (require_positive && running < 1) return false;
      labels[kids[j]] = running;
    }
  }
  return true;
}

// Labels straight from the Lukasiewicz word, whites in preorder. Blacks are
// reached in the order PTree numbers them, so the steps are drawn in the same
// order as sample_labels. Returns false on the first label below 1 when
// require_positive is set, before any tree is built.
bool sample_labels_on_word(int p, const std::vector<int>& word, int root_label, bool require_positive,
                           RngStream& rng, std::vector<int>& labels, std::vector<int>& steps) {
  struct Frame {
    int running;
    int assigned;  // children labelled so far; -1 before the steps are drawn
    std::size_t steps_at;
  };
  const std::size_t whites = word.size();
  labels.assign(whites, 0);
  labels[0] = root_label;
  std::vector<Frame> stack;
  std::vector<int> step_stack;
  std::vector<int> draw;
  for (int k = 0; k < word[0]; ++k) stack.push_back({root_label, -1, 0});
  for (std::size_t w = 1; w < whites; ++w) {
    while (stack.back().assigned == p - 1) {
      step_stack.resize(stack.back().steps_at);
      stack.pop_back();
    }
    Frame& f = stack.back();
    if (f.assigned < 0) {
      sample_composition(p, p, rng, draw);
      f.steps_at = step_stack.size();
      step_stack.insert(step_stack.end(), draw.begin(), draw.end());
      f.assigned = 0;
    }
    f.running += step_stack[f.steps_at + static_cast<std::size_t>(f.assigned)] - 1;
    ++f.assigned;
    const int label = f.running;
    if (require_positive && label < 1) return false;
    labels[w] = label;
    for (int k = 0; k < word[w]; ++k) stack.push_back({label, -1, step_stack.size()});
  }
  steps = std::move(draw);
  return true;
}

}  // namespace

PTree sample_ptree(int p, int n, RngStream& rng) {
  check_size(p, n);
  const auto word = sample_lukasiewicz(p, n, rng);
  return PTree::from_heights(p, detail::heights_from_multipliers(p, word));
}

Mobile sample_free_mobile(int p, int n, RngStream& rng) {
  PTree tree = sample_ptree(p, n, rng);
  std::vector<int> labels;
  std::vector<int> steps;
  sample_labels(tree, 0, false, rng, labels, steps);
  return Mobile(std::move(tree), std::move(labels), Variant::free);
}

Mobile sample_rooted_mobile(int p, int n, RngStream& rng, std::int64_t max_attempts) {
  check_size(p, n);
  std::vector<int> labels;
  std::vector<int> steps;
  for (std::int64_t attempt = 0; attempt < max_attempts; ++attempt) {
    const auto word = sample_lukasiewicz(p, n, rng);
    if (sample_labels_on_word(p, word, 1, true, rng, labels, steps)) {
      PTree tree = PTree::from_heights(p, detail::heights_from_multipliers(p, word));
      return Mobile(std::move(tree), std::move(labels), Variant::rooted);
    }
  }
  throw BudgetError("rooted sampling rejected " + std::to_string(max_attempts) +
                    " draws at p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                    "; use the pointed-map workflow (free variant) for large n");
}

Mobile sample_mobile(int p, int n, Variant variant, RngStream& rng) {
  return variant == Variant::rooted ? sample_rooted_mobile(p, n, rng)
                                    : sample_free_mobile(p, n, rng);
}

}  // namespace angulate
