#include "codegraph/dataset/normalize.hpp"

#include <algorithm>

namespace codegraph::dataset {

std::pair<std::vector<double>, NormalizationParams> normalize_targets(std::span<const double> seconds,
                                                                      std::string dataset_name) {
    if (seconds.empty()) throw DegenerateRange("no values to normalize for dataset '" + dataset_name + "'");
    const auto [lo, hi] = std::minmax_element(seconds.begin(), seconds.end());
    if (!(*lo < *hi)) {
        throw DegenerateRange("all execution times in dataset '" + dataset_name +
                              "' are identical; cannot fit a [0,1] range");
    }
    NormalizationParams params{std::move(dataset_name), *lo, *hi};
    return {normalize_with(seconds, params), params};
}

std::vector<double> normalize_with(std::span<const double> seconds, const NormalizationParams& params) {
    const double range = params.max_seconds - params.min_seconds;
    std::vector<double> out;
    out.reserve(seconds.size());
    for (double x : seconds) out.push_back(std::clamp((x - params.min_seconds) / range, 0.0, 1.0));
    return out;
}

double denormalize(double target, const NormalizationParams& params) noexcept {
    return params.min_seconds + target * (params.max_seconds - params.min_seconds);
}

}  // namespace codegraph::dataset
