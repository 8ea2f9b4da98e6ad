#ifndef STED_CONSISTENCY_HPP
#define STED_CONSISTENCY_HPP

#include "sted/sted.hpp"
#include "sted/tree.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sted {

struct SimilaritySet {
    std::vector<double> values; // n(n-1)/2 pairwise scores, lexicographic (i,j)
    std::size_t n_outputs = 0;
    Mode mode = Mode::Hybrid;
};

struct SummaryStats {
    double mean = 0.0;
    double std_dev = 0.0; // population
    double min = 0.0;
    double max = 0.0;
    double median = 0.0;
};

struct ConsistencyReport {
    double mean_consistency = 1.0;
    double sigma = 0.0;
    double sigma_max = 0.0;
    double sigma_hat = 0.0;
    double consistency_score = 1.0;
    double alpha = 20.0;
    Mode mode = Mode::Hybrid;
    std::size_t n_outputs = 0;
    SummaryStats summary;

    std::string to_json(bool pretty = false) const;
};

/// All unordered-pair STED scores of the outputs, lexicographic (i,j) order.
/// jobs = 0 uses one worker per logical CPU.
SimilaritySet pairwise_similarities(const std::vector<DocumentTree>& outputs,
                                    const StedConfig& config, SimilarityContext& ctx,
                                    unsigned jobs = 1);

/// Arithmetic mean of the pairwise values; throws EmptySet when empty.
double mean_consistency(const SimilaritySet& set);

/// Largest population standard deviation reachable by n values in [0,1]:
/// floor(n/2) zeros and ceil(n/2) ones. Throws TooFew for n < 2.
double sigma_max(std::size_t n);

SummaryStats summary_stats(const std::vector<double>& values);

/// Dispersion-based score (1/(1+2*sigma_hat))^alpha over the similarity set.
/// One or zero values give exactly 1.
ConsistencyReport consistency_score(const SimilaritySet& set, double alpha = 20.0);

/// Full pipeline: mode preset -> pairwise scores -> report.
ConsistencyReport evaluate_consistency(const std::vector<DocumentTree>& outputs, Mode mode,
                                       const StedConfig& config, SimilarityContext& ctx,
                                       double alpha = 20.0, unsigned jobs = 1);

} // namespace sted

#endif // STED_CONSISTENCY_HPP
