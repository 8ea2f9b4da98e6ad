#ifndef STED_TED_HPP
#define STED_TED_HPP

#include "sted/sted.hpp"
#include "sted/tree.hpp"

namespace sted {

/// Plain ordered tree edit distance: children compared positionally, labels
/// and values matched exactly, no semantics. Used as the comparison baseline.
struct TedConfig {
    double insert_cost = 1.0;
    double delete_cost = 1.0;
    double lambda = 0.1; // same per-level size penalty as the STED normalization
};

/// Similarity in [0,1] under the same per-level normalization as STED.
double ted_similarity(const DocumentTree& t1, const DocumentTree& t2, const TedConfig& config = {});

/// Same report shape as the STED comparator, with metric "ted".
SimilarityResult ted_report(const DocumentTree& t1, const DocumentTree& t2,
                            const TedConfig& config = {});

} // namespace sted

#endif // STED_TED_HPP
