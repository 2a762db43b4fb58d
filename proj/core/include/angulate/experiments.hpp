#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "angulate/experiment_config.hpp"
#include "angulate/planar_map.hpp"
#include "angulate/report.hpp"

namespace angulate {

struct RunOptions {
  int threads = 1;
};

// Runs fn(0..count-1) on up to `threads` workers. Results land at their own
// index, so the output does not depend on scheduling. The exception of the
// lowest failing index is rethrown.
template <class T>
std::vector<T> run_replicas(int count, int threads, const std::function<T(int)>& fn) {
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(std::max(count, 0)));
  std::vector<std::exception_ptr> errors(slots.size());
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = std::clamp(threads, 1, std::max(count, 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

StatReport exp_invariant_suite(const ExperimentConfig& cfg, const RunOptions& opts = {});
StatReport exp_profile_universality(const ExperimentConfig& cfg, const RunOptions& opts = {});
StatReport exp_two_point_scaling(const ExperimentConfig& cfg, const RunOptions& opts = {});
StatReport exp_ball_volume(const ExperimentConfig& cfg, const RunOptions& opts = {});
StatReport exp_ise_tail(const ExperimentConfig& cfg, const RunOptions& opts = {});
StatReport exp_conjecture_gap(const ExperimentConfig& cfg, const RunOptions& opts = {});

// Dispatches on cfg.name after cfg.validate().
StatReport run_experiment(const ExperimentConfig& cfg, const RunOptions& opts = {});

// Copy of the map with the far end of edge 0 moved to a vertex at the same
// distance parity as its tail, rotation system kept; used to exercise the
// failure path.
PlanarMap corrupt_map(const PlanarMap& map);

}  // namespace angulate
