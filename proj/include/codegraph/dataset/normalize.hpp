#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace codegraph::dataset {

struct NormalizationParams {
    std::string dataset_name;
    double min_seconds = 0.0;
    double max_seconds = 0.0;
};

/// Raised when every value is identical, so no [0,1] range can be fitted.
class DegenerateRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fits min-max scaling to `seconds` and applies it.
std::pair<std::vector<double>, NormalizationParams> normalize_targets(std::span<const double> seconds,
                                                                      std::string dataset_name);

/// Applies previously fitted parameters; results are clamped to [0,1].
std::vector<double> normalize_with(std::span<const double> seconds, const NormalizationParams& params);

double denormalize(double target, const NormalizationParams& params) noexcept;

}  // namespace codegraph::dataset
