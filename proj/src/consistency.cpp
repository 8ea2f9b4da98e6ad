#include "sted/consistency.hpp"

#include "sted/errors.hpp"
#include "sted/parallel.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace sted {

namespace {

double population_std(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    return std::sqrt(var);
}

} // namespace

SimilaritySet pairwise_similarities(const std::vector<DocumentTree>& outputs,
                                    const StedConfig& config, SimilarityContext& ctx,
                                    unsigned jobs) {
    SimilaritySet set;
    set.n_outputs = outputs.size();
    set.mode = config.mode;
    if (outputs.size() < 2) return set;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(outputs.size() * (outputs.size() - 1) / 2);
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        for (std::size_t j = i + 1; j < outputs.size(); ++j) {
            pairs.emplace_back(i, j);
        }
    }
    set.values.resize(pairs.size(), 0.0);
    parallel_for_indexed(pairs.size(), jobs, [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        try {
            set.values[k] = sted_similarity(outputs[i], outputs[j], config, ctx).score;
        } catch (const std::exception& e) {
            throw std::runtime_error("comparison of outputs " + std::to_string(i) + " and " +
                                     std::to_string(j) + " failed: " + e.what());
        }
    });
    return set;
}

double mean_consistency(const SimilaritySet& set) {
    if (set.values.empty()) {
        throw EmptySet("mean_consistency over an empty similarity set");
    }
    double sum = 0.0;
    for (double v : set.values) sum += v;
    return sum / static_cast<double>(set.values.size());
}

double sigma_max(std::size_t n) {
    if (n < 2) {
        throw TooFew("sigma_max requires at least 2 values");
    }
    std::vector<double> extremal(n, 0.0);
    for (std::size_t i = n / 2; i < n; ++i) extremal[i] = 1.0; // ceil(n/2) ones
    return population_std(extremal);
}

SummaryStats summary_stats(const std::vector<double>& values) {
    if (values.empty()) {
        throw EmptySet("summary_stats over an empty list");
    }
    SummaryStats s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    s.std_dev = population_std(values);
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    s.median = sorted.size() % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
    return s;
}

ConsistencyReport consistency_score(const SimilaritySet& set, double alpha) {
    ConsistencyReport report;
    report.alpha = alpha;
    report.mode = set.mode;
    report.n_outputs = set.n_outputs;

    if (set.values.size() <= 1) {
        // Too few similarity values for a dispersion estimate: perfect score.
        report.mean_consistency = set.values.empty() ? 1.0 : set.values.front();
        report.consistency_score = 1.0;
        const double v = report.mean_consistency;
        report.summary = {v, 0.0, v, v, v};
        return report;
    }

    report.mean_consistency = mean_consistency(set);
    report.sigma = population_std(set.values);
    report.sigma_max = sigma_max(set.values.size());
    report.sigma_hat = report.sigma_max > 0.0 ? report.sigma / report.sigma_max : 0.0;
    report.consistency_score = std::pow(1.0 / (1.0 + 2.0 * report.sigma_hat), alpha);
    report.summary = summary_stats(set.values);
    return report;
}

ConsistencyReport evaluate_consistency(const std::vector<DocumentTree>& outputs, Mode mode,
                                       const StedConfig& config, SimilarityContext& ctx,
                                       double alpha, unsigned jobs) {
    const StedConfig moded = config.with_mode(mode);
    const SimilaritySet set = pairwise_similarities(outputs, moded, ctx, jobs);
    return consistency_score(set, alpha);
}

std::string ConsistencyReport::to_json(bool pretty) const {
    nlohmann::ordered_json j;
    j["mean_consistency"] = mean_consistency;
    j["sigma"] = sigma;
    j["sigma_max"] = sigma_max;
    j["sigma_hat"] = sigma_hat;
    j["consistency_score"] = consistency_score;
    j["alpha"] = alpha;
    j["mode"] = mode_name(mode);
    j["n_outputs"] = n_outputs;
    j["summary"] = {{"mean", summary.mean},
                    {"std", summary.std_dev},
                    {"min", summary.min},
                    {"max", summary.max},
                    {"median", summary.median}};
    return pretty ? j.dump(2) + "\n" : j.dump();
}

} // namespace sted
