#include "sted/ted.hpp"

#include <algorithm>
#include <cmath>

namespace sted {

namespace {

bool header_equal(const TreeNode& a, const TreeNode& b) {
    return a.type == b.type && a.label == b.label;
}

bool value_equal(const TreeNode& a, const TreeNode& b) {
    switch (a.type) {
    case NodeType::String: return a.string_value == b.string_value;
    case NodeType::Number: return numbers_equal(a, b);
    case NodeType::Boolean: return a.bool_value == b.bool_value;
    default: return true;
    }
}

double pair_distance(const TreeNode& a, const TreeNode& b, const TedConfig& cfg);

double level_distance(const std::vector<TreeNode>& left, const std::vector<TreeNode>& right,
                      const TedConfig& cfg) {
    const std::size_t nl = left.size();
    const std::size_t nr = right.size();
    if (nl == 0 && nr == 0) return 0.0;
    const std::size_t overlap = std::min(nl, nr);
    const std::size_t delta = std::max(nl, nr) - overlap;
    double cost = 0.0;
    for (std::size_t i = 0; i < overlap; ++i) {
        cost += pair_distance(left[i], right[i], cfg);
    }
    cost += static_cast<double>(nl > nr ? nl - nr : 0) * cfg.delete_cost;
    cost += static_cast<double>(nr > nl ? nr - nl : 0) * cfg.insert_cost;
    const double ratio =
        (cost + cfg.lambda * static_cast<double>(delta)) / static_cast<double>(std::max(nl, nr));
    return std::min(1.0, ratio);
}

double pair_distance(const TreeNode& a, const TreeNode& b, const TedConfig& cfg) {
    if (!header_equal(a, b)) return 1.0;
    if (a.is_leaf() && b.is_leaf()) {
        return value_equal(a, b) ? 0.0 : 1.0;
    }
    if (a.is_container() && b.is_container()) {
        return level_distance(a.children, b.children, cfg);
    }
    return 1.0;
}

void collect_diffs(const TreeNode& a, const TreeNode& b, const TedConfig& cfg,
                   std::vector<Difference>& out);

std::string short_text(const TreeNode& n) {
    std::string s = serialize(n, 0);
    if (s.size() > 60) {
        s.resize(57);
        s += "...";
    }
    return s;
}

void collect_level(const TreeNode& a, const TreeNode& b, const TedConfig& cfg,
                   std::vector<Difference>& out) {
    const std::size_t overlap = std::min(a.children.size(), b.children.size());
    for (std::size_t i = 0; i < overlap; ++i) {
        collect_diffs(a.children[i], b.children[i], cfg, out);
    }
    for (std::size_t i = overlap; i < a.children.size(); ++i) {
        out.push_back({a.children[i].path, DiffKind::Missing, short_text(a.children[i]), "",
                       cfg.delete_cost});
    }
    for (std::size_t j = overlap; j < b.children.size(); ++j) {
        out.push_back({b.children[j].path, DiffKind::Extra, "", short_text(b.children[j]),
                       cfg.insert_cost});
    }
}

void collect_diffs(const TreeNode& a, const TreeNode& b, const TedConfig& cfg,
                   std::vector<Difference>& out) {
    const double d = pair_distance(a, b, cfg);
    if (d == 0.0) return;
    if (a.type != b.type) {
        out.push_back({a.path,
                       a.is_container() != b.is_container() ? DiffKind::Restructured
                                                            : DiffKind::TypeChanged,
                       short_text(a), short_text(b), d});
        return;
    }
    if (a.label != b.label) {
        out.push_back({a.path, DiffKind::KeyRenamed, short_text(a), short_text(b), d});
        return;
    }
    if (a.is_leaf()) {
        out.push_back({a.path, DiffKind::ValueChanged, short_text(a), short_text(b), d});
        return;
    }
    collect_level(a, b, cfg, out);
}

} // namespace

double ted_similarity(const DocumentTree& t1, const DocumentTree& t2, const TedConfig& config) {
    const TreeNode& a = t1.root;
    const TreeNode& b = t2.root;
    if (a.is_container() && b.is_container() && a.type == b.type) {
        return 1.0 - level_distance(a.children, b.children, config);
    }
    return 1.0 - pair_distance(a, b, config);
}

SimilarityResult ted_report(const DocumentTree& t1, const DocumentTree& t2,
                            const TedConfig& config) {
    SimilarityResult result;
    result.metric = "ted";
    result.mode = Mode::Structural;
    result.score = ted_similarity(t1, t2, config);
    const TreeNode& a = t1.root;
    const TreeNode& b = t2.root;
    if (a.is_container() && b.is_container() && a.type == b.type) {
        collect_level(a, b, config, result.differences);
    } else {
        collect_diffs(a, b, config, result.differences);
    }
    std::sort(result.differences.begin(), result.differences.end(),
              [](const Difference& x, const Difference& y) { return x.path < y.path; });
    return result;
}

} // namespace sted
