#pragma once

#include <json.hpp>

#include "angulate/experiment_config.hpp"

namespace angulate::detail {

nlohmann::ordered_json config_json(const ExperimentConfig& cfg);

}  // namespace angulate::detail
