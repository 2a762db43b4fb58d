#include <algorithm>
#include <cmath>
#include <sstream>

#include "angulate/error.hpp"
#include "angulate/mobile.hpp"

namespace angulate {

const char* to_string(Variant v) noexcept {
  return v == Variant::rooted ? "rooted" : "free";
}

Variant parse_variant(const std::string& s) {
  if (s == "rooted") return Variant::rooted;
  if (s == "free") return Variant::free;
  throw ParameterError("unknown variant '" + s + "' (expected rooted|free)");
}

Mobile::Mobile(PTree tree, std::vector<int> labels, Variant variant)
    : tree_(std::move(tree)), labels_(std::move(labels)), variant_(variant) {}

std::string ContourPair::canonical() const {
  std::ostringstream os;
  os << p << ' ' << n << " |";
  for (int h : heights) os << ' ' << h;
  os << " |";
  for (int v : labels) os << ' ' << v;
  return os.str();
}

ScalingConstants::ScalingConstants(int p_) : p(p_) {
  if (p < 2) throw ParameterError("scaling constants need p >= 2");
  const double pd = p;
  contour = 0.5 * std::sqrt(pd / (pd - 1.0));
  label = std::pow(9.0 / (4.0 * pd * (pd - 1.0)), 0.25);
}

MobileReport validate_mobile(const Mobile& mobile) {
  MobileReport report;
  const PTree& tree = mobile.tree();
  const auto labels = mobile.labels();
  if (static_cast<int>(labels.size()) != tree.white_count()) {
    report.violations.push_back({MobileViolationKind::size_mismatch, -1,
                                 "expected " + std::to_string(tree.white_count()) +
                                     " labels, got " + std::to_string(labels.size())});
    return report;
  }

  const int root_expected = mobile.variant() == Variant::rooted ? 1 : 0;
  if (labels[0] != root_expected) {
    report.violations.push_back(
        {MobileViolationKind::root_label, 0,
         std::string(to_string(mobile.variant())) + " mobile needs root label " +
             std::to_string(root_expected) + ", got " + std::to_string(labels[0])});
  }
  if (mobile.variant() == Variant::rooted) {
    for (int w = 0; w < tree.white_count(); ++w) {
      if (labels[w] < 1) {
        report.violations.push_back({MobileViolationKind::positivity, w,
                                     "label positivity violated at white vertex " +
                                         std::to_string(w) + " (label " +
                                         std::to_string(labels[w]) + ")"});
      }
    }
  }

  // Around each black vertex: father, children left to right, back to father.
  for (int b = 0; b < tree.black_count(); ++b) {
    int prev = labels[tree.black_father(b)];
    const auto kids = tree.black_children(b);
    for (std::size_t j = 0; j <= kids.size(); ++j) {
      const int cur = j < kids.size() ? labels[kids[j]] : labels[tree.black_father(b)];
      if (cur - prev < -1) {
        report.violations.push_back({MobileViolationKind::cyclic_step, b,
                                     "cyclic label step " + std::to_string(cur - prev) +
                                         " < -1 around black vertex " + std::to_string(b)});
        break;
      }
      prev = cur;
    }
  }
  return report;
}

void require_valid(const Mobile& mobile) {
  const MobileReport report = validate_mobile(mobile);
  if (!report.ok()) throw ValidationError("invalid mobile: " + report.violations.front().message);
}

ContourPair contour(const Mobile& mobile) {
  require_valid(mobile);
  const PTree& tree = mobile.tree();
  ContourPair c;
  c.p = tree.p();
  c.n = tree.black_count();
  c.heights.assign(tree.heights().begin(), tree.heights().end());
  c.labels.reserve(c.heights.size());
  for (int v : tree.contour()) c.labels.push_back(mobile.label(v));
  return c;
}

Mobile mobile_from_contour(const ContourPair& c, Variant variant) {
  if (c.p < 2) throw ParameterError("contour pair: p must be >= 2");
  const std::size_t len = static_cast<std::size_t>(c.p) * static_cast<std::size_t>(c.n) + 1;
  if (c.n < 1 || c.heights.size() != len || c.labels.size() != len) {
    throw DecodeError("contour pair sequences must both have length pn+1 = " +
                          std::to_string(len),
                      std::min(c.heights.size(), c.labels.size()));
  }
  PTree tree = PTree::from_heights(c.p, c.heights);

  if (c.labels.front() != c.labels.back()) {
    throw DecodeError("label sequence must start and end at the root label", len - 1);
  }
  std::vector<int> labels(static_cast<std::size_t>(tree.white_count()), 0);
  std::vector<char> seen(labels.size(), 0);
  const auto walk = tree.contour();
  for (std::size_t i = 0; i < len; ++i) {
    if (i + 1 < len && c.labels[i + 1] - c.labels[i] < -1) {
      throw DecodeError("label step " + std::to_string(c.labels[i + 1] - c.labels[i]) +
                            " below -1",
                        i);
    }
    const int w = walk[i];
    if (seen[w] && labels[w] != c.labels[i]) {
      throw DecodeError("label of white vertex " + std::to_string(w) +
                            " differs between visits",
                        i);
    }
    seen[w] = 1;
    labels[w] = c.labels[i];
  }

  Mobile mobile(std::move(tree), std::move(labels), variant);
  require_valid(mobile);
  return mobile;
}

double count_ptrees(int p, int n) {
  // binom(pn, n) / ((p-1)n + 1), evaluated in log space.
  const double pn = static_cast<double>(p) * n;
  const double log_binom = std::lgamma(pn + 1) - std::lgamma(n + 1.0) - std::lgamma(pn - n + 1);
  return std::round(std::exp(log_binom) / ((p - 1.0) * n + 1.0));
}

std::int64_t cyclic_step_count(int p) {
  // binom(2p-1, p-1)
  std::int64_t r = 1;
  for (int k = 1; k <= p - 1; ++k) r = r * (p + k) / k;
  return r;
}

}  // namespace angulate
