#include "sted/sted.hpp"

#include "sted/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace sted {

const char* mode_name(Mode mode) {
    switch (mode) {
    case Mode::Structural: return "structural";
    case Mode::Semantic: return "semantic";
    case Mode::Hybrid: return "hybrid";
    }
    return "hybrid";
}

Mode mode_from_name(const std::string& name) {
    if (name == "structural") return Mode::Structural;
    if (name == "semantic") return Mode::Semantic;
    if (name == "hybrid") return Mode::Hybrid;
    throw std::invalid_argument("unknown mode: " + name);
}

StedConfig StedConfig::for_mode(Mode mode) {
    StedConfig cfg;
    return cfg.with_mode(mode);
}

StedConfig StedConfig::with_mode(Mode mode) const {
    StedConfig cfg = *this;
    cfg.mode = mode;
    switch (mode) {
    case Mode::Structural:
        cfg.w_s = 1.0;
        cfg.w_c = 0.0;
        break;
    case Mode::Semantic:
        cfg.w_s = 0.0;
        cfg.w_c = 1.0;
        break;
    case Mode::Hybrid:
        cfg.w_s = 0.5;
        cfg.w_c = 0.5;
        break;
    }
    return cfg;
}

void StedConfig::validate() const {
    if (std::abs(w_s + w_c - 1.0) > 1e-9) {
        throw std::invalid_argument("w_s + w_c must equal 1");
    }
    if (w_s < 0.0 || w_c < 0.0 || lambda < 0.0 || insert_cost < 0.0 || delete_cost < 0.0) {
        throw std::invalid_argument("costs and weights must be non-negative");
    }
    scalar_policy.validate();
}

const char* diff_kind_name(DiffKind kind) {
    switch (kind) {
    case DiffKind::KeyRenamed: return "key-renamed";
    case DiffKind::ValueChanged: return "value-changed";
    case DiffKind::TypeChanged: return "type-changed";
    case DiffKind::Missing: return "missing";
    case DiffKind::Extra: return "extra";
    case DiffKind::Restructured: return "restructured";
    }
    return "value-changed";
}

namespace {

constexpr double kZeroEps = 1e-12;
constexpr double kReportThreshold = 0.05;
constexpr std::size_t kBranchingWarning = 512;

std::size_t subtree_size(const TreeNode& node) {
    std::size_t n = 1;
    for (const TreeNode& c : node.children) n += subtree_size(c);
    return n;
}

std::string excerpt(const TreeNode& node) {
    std::string s = serialize(node, 0);
    if (s.size() > 60) {
        s.resize(57);
        s += "...";
    }
    return s;
}

double level_similarity_value(double matched_cost, std::size_t delta, std::size_t max_children,
                              double lambda) {
    if (max_children == 0) return 1.0;
    const double ratio =
        (matched_cost + lambda * static_cast<double>(delta)) / static_cast<double>(max_children);
    return 1.0 - std::min(1.0, ratio);
}

/// One pairwise comparison. Memoizes pair costs by node address so the
/// report walk does not redo the bottom-up work.
class Comparator {
public:
    Comparator(const StedConfig& cfg, SimilarityContext& ctx) : cfg_(cfg), ctx_(ctx) {}

    double pair_cost(const TreeNode& a, const TreeNode& b) {
        const MemoKey key{&a, &b};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const double cost = compute_pair_cost(a, b);
        memo_.emplace(key, cost);
        return cost;
    }

    MatchResult match_children(const std::vector<TreeNode>& left,
                               const std::vector<TreeNode>& right) {
        MatchResult result;
        const std::size_t nl = left.size();
        const std::size_t nr = right.size();
        result.unmatched_delta = nl > nr ? nl - nr : nr - nl;
        if (nl == 0 && nr == 0) {
            result.level_similarity = 1.0;
            return result;
        }
        if (std::max(nl, nr) > kBranchingWarning && !branching_warned_) {
            branching_warned_ = true;
            std::cerr << "sted: warning: child list of " << std::max(nl, nr)
                      << " exceeds " << kBranchingWarning
                      << "; exact assignment will be slow\n";
        }

        CostMatrix matrix(nl, nr, cfg_.insert_cost, cfg_.delete_cost);
        for (std::size_t i = 0; i < nl; ++i) {
            for (std::size_t j = 0; j < nr; ++j) {
                matrix.set(i, j, pair_cost(left[i], right[j]));
            }
        }
        if (cfg_.unmatched_basis == UnmatchedCostBasis::PerDescendant) {
            for (std::size_t j = 0; j < nr; ++j) {
                for (std::size_t i = nl; i < matrix.size(); ++i) {
                    matrix.set(i, j, cfg_.insert_cost * static_cast<double>(subtree_size(right[j])));
                }
            }
            for (std::size_t i = 0; i < nl; ++i) {
                for (std::size_t j = nr; j < matrix.size(); ++j) {
                    matrix.set(i, j, cfg_.delete_cost * static_cast<double>(subtree_size(left[i])));
                }
            }
        }

        const AssignmentResult solved = hungarian_solve(matrix);
        for (std::size_t i = 0; i < solved.row_to_col.size(); ++i) {
            result.assignment.emplace_back(i, solved.row_to_col[i]);
        }
        result.matched_cost = solved.total_cost;
        result.level_similarity = level_similarity_value(result.matched_cost,
                                                         result.unmatched_delta,
                                                         std::max(nl, nr), cfg_.lambda);
        return result;
    }

    double label_similarity(const TreeNode& a, const TreeNode& b) {
        if (!a.label && !b.label) return 1.0;
        if (!a.label || !b.label) return 0.0;
        if (*a.label == *b.label) return 1.0;
        if (a.label->empty() || b.label->empty()) return 0.0;
        return ctx_.text_pair_similarity(normalize_field_name(*a.label),
                                         normalize_field_name(*b.label));
    }

    double type_agreement(const TreeNode& a, const TreeNode& b) {
        if (a.type == b.type) return 1.0;
        if (a.is_leaf() && b.is_leaf() && ctx_.policy().coercion_enabled) {
            // Cross-type agreement only when the values coerce to equal.
            if (scalar_similarity(a, b, ctx_) > 0.0) {
                return 1.0 - ctx_.policy().coercion_penalty;
            }
        }
        return 0.0;
    }

    double structural_part(const TreeNode& a, const TreeNode& b) {
        return 1.0 - label_similarity(a, b) * type_agreement(a, b);
    }

    double content_part(const TreeNode& a, const TreeNode& b) {
        if (a.is_leaf() && b.is_leaf()) {
            return 1.0 - scalar_similarity(a, b, ctx_);
        }
        if (a.is_container() && b.is_container()) {
            return 1.0 - match_children(a.children, b.children).level_similarity;
        }
        return 1.0; // leaf vs container carries no comparable content
    }

    const StedConfig& config() const { return cfg_; }

private:
    struct MemoKey {
        const TreeNode* a;
        const TreeNode* b;
        bool operator==(const MemoKey& o) const noexcept { return a == o.a && b == o.b; }
    };
    struct MemoHash {
        std::size_t operator()(const MemoKey& k) const noexcept {
            return std::hash<const void*>()(k.a) * 1000003u ^ std::hash<const void*>()(k.b);
        }
    };

    double compute_pair_cost(const TreeNode& a, const TreeNode& b) {
        const double gamma_struct = structural_part(a, b);
        const double gamma_content = content_part(a, b);
        return cfg_.w_s * gamma_struct + cfg_.w_c * gamma_content;
    }

    const StedConfig& cfg_;
    SimilarityContext& ctx_;
    std::unordered_map<MemoKey, double, MemoHash> memo_;
    bool branching_warned_ = false;
};

/// Walks the chosen assignments and classifies reportable pairs.
class ReportWalker {
public:
    ReportWalker(Comparator& cmp, double threshold, bool include_zero)
        : cmp_(cmp), threshold_(threshold), include_zero_(include_zero) {}

    std::vector<Difference> collect(const TreeNode& a, const TreeNode& b) {
        if (a.is_container() && b.is_container() && a.type == b.type) {
            walk_level(a, b);
        } else {
            record_pair(a, b, cmp_.pair_cost(a, b));
        }
        std::sort(diffs_.begin(), diffs_.end(), [](const Difference& x, const Difference& y) {
            if (x.path != y.path) return x.path < y.path;
            return static_cast<int>(x.kind) < static_cast<int>(y.kind);
        });
        return std::move(diffs_);
    }

private:
    void walk_level(const TreeNode& a, const TreeNode& b) {
        const MatchResult mr = cmp_.match_children(a.children, b.children);
        for (const auto& [i, j] : mr.assignment) {
            const bool left_real = i < a.children.size();
            const bool right_real = j < b.children.size();
            if (left_real && right_real) {
                handle_match(a.children[i], b.children[j]);
            } else if (right_real) {
                add(b.children[j].path, DiffKind::Extra, "", excerpt(b.children[j]),
                    cmp_.config().insert_cost);
            } else if (left_real) {
                add(a.children[i].path, DiffKind::Missing, excerpt(a.children[i]), "",
                    cmp_.config().delete_cost);
            }
        }
    }

    void handle_match(const TreeNode& ca, const TreeNode& cb) {
        const double cost = cmp_.pair_cost(ca, cb);
        if (ca.is_container() && cb.is_container() && ca.type == cb.type) {
            if (ca.label != cb.label && cost > threshold_) {
                add(ca.path, DiffKind::KeyRenamed, excerpt(ca), excerpt(cb), cost);
            }
            if (cost > kZeroEps || include_zero_) {
                walk_level(ca, cb);
            }
            return;
        }
        record_pair(ca, cb, cost);
    }

    void record_pair(const TreeNode& ca, const TreeNode& cb, double cost) {
        if (cost <= threshold_ && !include_zero_) return;
        add(ca.path, classify(ca, cb), excerpt(ca), excerpt(cb), cost);
    }

    DiffKind classify(const TreeNode& ca, const TreeNode& cb) {
        if (ca.is_container() != cb.is_container()) return DiffKind::Restructured;
        if (ca.type != cb.type && ca.is_container()) return DiffKind::TypeChanged;
        const double s_part = cmp_.config().w_s * cmp_.structural_part(ca, cb);
        const double c_part = cmp_.config().w_c * cmp_.content_part(ca, cb);
        if (s_part >= c_part && s_part > 0.0) {
            return ca.type != cb.type ? DiffKind::TypeChanged : DiffKind::KeyRenamed;
        }
        return ca.is_leaf() ? DiffKind::ValueChanged : DiffKind::Restructured;
    }

    void add(std::string path, DiffKind kind, std::string left, std::string right, double cost) {
        diffs_.push_back({std::move(path), kind, std::move(left), std::move(right), cost});
    }

    Comparator& cmp_;
    double threshold_;
    bool include_zero_;
    std::vector<Difference> diffs_;
};

SimilarityResult compare_impl(const DocumentTree& t1, const DocumentTree& t2,
                              const StedConfig& config, SimilarityContext& ctx, double threshold,
                              bool include_zero) {
    config.validate();
    Comparator cmp(config, ctx);
    const TreeNode& a = t1.root;
    const TreeNode& b = t2.root;

    SimilarityResult result;
    result.metric = "sted";
    result.mode = config.mode;
    if (a.is_container() && b.is_container() && a.type == b.type) {
        // Roots are anonymous containers: the score is the normalized
        // child-level similarity of the root matching.
        result.score = cmp.match_children(a.children, b.children).level_similarity;
    } else {
        result.score = std::clamp(1.0 - cmp.pair_cost(a, b), 0.0, 1.0);
    }

    ReportWalker walker(cmp, threshold, include_zero);
    result.differences = walker.collect(a, b);
    return result;
}

} // namespace

double node_update_cost(const TreeNode& a, const TreeNode& b, const StedConfig& config,
                        SimilarityContext& ctx) {
    config.validate();
    Comparator cmp(config, ctx);
    return cmp.pair_cost(a, b);
}

MatchResult optimal_children_matching(const std::vector<TreeNode>& left,
                                      const std::vector<TreeNode>& right, const StedConfig& config,
                                      SimilarityContext& ctx) {
    config.validate();
    Comparator cmp(config, ctx);
    return cmp.match_children(left, right);
}

SimilarityResult sted_similarity(const DocumentTree& t1, const DocumentTree& t2,
                                 const StedConfig& config, SimilarityContext& ctx) {
    return compare_impl(t1, t2, config, ctx, kReportThreshold, false);
}

SimilarityResult compare_report(const DocumentTree& t1, const DocumentTree& t2,
                                const StedConfig& config, SimilarityContext& ctx,
                                bool include_zero_cost) {
    return compare_impl(t1, t2, config, ctx, kZeroEps, include_zero_cost);
}

std::string SimilarityResult::to_json(bool pretty) const {
    nlohmann::ordered_json j;
    j["score"] = score;
    j["metric"] = metric;
    j["mode"] = mode_name(mode);
    j["differences"] = nlohmann::ordered_json::array();
    for (const Difference& d : differences) {
        nlohmann::ordered_json rec;
        rec["path"] = d.path;
        rec["kind"] = diff_kind_name(d.kind);
        rec["left"] = d.left;
        rec["right"] = d.right;
        rec["cost"] = d.cost;
        j["differences"].push_back(std::move(rec));
    }
    return pretty ? j.dump(2) + "\n" : j.dump();
}

} // namespace sted
