#ifndef STED_STED_HPP
#define STED_STED_HPP

#include "sted/hungarian.hpp"
#include "sted/semantic.hpp"
#include "sted/tree.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sted {

enum class Mode { Structural, Semantic, Hybrid };

const char* mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

/// How an unmatched child subtree is priced: a flat unit per subtree
/// (default, keeps level scores in [0,1]) or one unit per descendant node.
enum class UnmatchedCostBasis { PerSubtree, PerDescendant };

struct StedConfig {
    double w_s = 0.5; // structural weight
    double w_c = 0.5; // content weight
    double lambda = 0.1;
    double insert_cost = 1.0;
    double delete_cost = 1.0;
    Mode mode = Mode::Hybrid;
    UnmatchedCostBasis unmatched_basis = UnmatchedCostBasis::PerSubtree;
    ScalarComparisonPolicy scalar_policy;

    /// Weight preset for a mode: structural (1,0), semantic (0,1), hybrid (.5,.5).
    static StedConfig for_mode(Mode mode);
    StedConfig with_mode(Mode mode) const;

    /// Throws std::invalid_argument unless w_s + w_c = 1 (within 1e-9) etc.
    void validate() const;
};

struct MatchResult {
    std::vector<std::pair<std::size_t, std::size_t>> assignment;
    double matched_cost = 0.0;       // total assignment cost, padding included
    std::size_t unmatched_delta = 0; // ||C1| - |C2||
    double level_similarity = 1.0;
};

enum class DiffKind { KeyRenamed, ValueChanged, TypeChanged, Missing, Extra, Restructured };

const char* diff_kind_name(DiffKind kind);

struct Difference {
    std::string path;
    DiffKind kind = DiffKind::ValueChanged;
    std::string left;
    std::string right;
    double cost = 0.0;
};

struct SimilarityResult {
    double score = 0.0;
    std::string metric = "sted";
    Mode mode = Mode::Hybrid;
    std::vector<Difference> differences;

    /// Fixed-shape JSON report:
    /// {"score":...,"metric":...,"mode":...,"differences":[{"path","kind","left","right","cost"}...]}
    std::string to_json(bool pretty = false) const;
};

/// Semantic update cost of a node pair: w_s*(1 - label_sim*type_agreement) +
/// w_c*(1 - content_sim), where content is the scalar similarity for leaves
/// and the recursive child-level similarity for containers.
double node_update_cost(const TreeNode& a, const TreeNode& b, const StedConfig& config,
                        SimilarityContext& ctx);

/// Hungarian matching over the padded cost matrix of two child lists, with
/// the per-level normalized similarity.
MatchResult optimal_children_matching(const std::vector<TreeNode>& left,
                                      const std::vector<TreeNode>& right,
                                      const StedConfig& config, SimilarityContext& ctx);

/// STED similarity in [0,1] with a per-path report of unmatched children and
/// matched pairs costing more than 0.05.
SimilarityResult sted_similarity(const DocumentTree& t1, const DocumentTree& t2,
                                 const StedConfig& config, SimilarityContext& ctx);

/// As sted_similarity but keeps every non-zero-cost record;
/// include_zero_cost additionally keeps exact matches.
SimilarityResult compare_report(const DocumentTree& t1, const DocumentTree& t2,
                                const StedConfig& config, SimilarityContext& ctx,
                                bool include_zero_cost = false);

} // namespace sted

#endif // STED_STED_HPP
