#include "sted/variation.hpp"

#include "sted/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sted {

namespace {

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0); // [0,1)
}

std::size_t round_half_up(double x) {
    return static_cast<std::size_t>(std::floor(x + 0.5));
}

/// Seeded permutation of [0, n); ratios take prefixes of it so site choices
/// nest across ratio levels.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = rng() % i;
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed ^ (salt + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
}

} // namespace

void TypeMix::validate() const {
    const double sum = string_share + integer_share + array_share + object_share;
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("type mix proportions must sum to 1");
    }
    if (string_share < 0 || integer_share < 0 || array_share < 0 || object_share < 0) {
        throw std::invalid_argument("type mix proportions must be non-negative");
    }
}

const char* variation_kind_name(VariationKind kind) {
    switch (kind) {
    case VariationKind::FieldRename: return "field-rename";
    case VariationKind::Expression: return "expression";
    case VariationKind::Semantic: return "semantic";
    case VariationKind::Flatten: return "flatten";
    case VariationKind::Nest: return "nest";
    }
    return "field-rename";
}

VariationKind variation_kind_from_name(const std::string& name) {
    if (name == "field-rename") return VariationKind::FieldRename;
    if (name == "expression") return VariationKind::Expression;
    if (name == "semantic") return VariationKind::Semantic;
    if (name == "flatten") return VariationKind::Flatten;
    if (name == "nest") return VariationKind::Nest;
    throw std::invalid_argument("unknown variation kind: " + name);
}

bool variation_kind_is_gradual(VariationKind kind) {
    return kind == VariationKind::FieldRename || kind == VariationKind::Expression ||
           kind == VariationKind::Semantic;
}

namespace {

// ---------------------------------------------------------------------------
// base document generation
// ---------------------------------------------------------------------------

enum GenType { kString = 0, kInteger = 1, kArray = 2, kObject = 3 };

struct GenNode {
    NodeType type = NodeType::Null;
    std::string label;
    bool labeled = false;
    std::string svalue;
    std::int64_t ivalue = 0;
    std::size_t depth = 1;
    std::size_t member_cap = 0; // objects only
    std::vector<std::size_t> children;
    std::set<std::string> used_keys; // objects only
};

// Documents are built root-light: the root holds a handful of sections and
// the bulk of the fields lives in nested objects and arrays of records,
// which is how production LLM outputs are shaped.
class DocBuilder {
public:
    DocBuilder(const BaseDocSpec& spec) : spec_(spec), rng_(spec.seed) {
        quota_[kString] = spec.type_mix.string_share * static_cast<double>(spec.target_fields);
        quota_[kInteger] = spec.type_mix.integer_share * static_cast<double>(spec.target_fields);
        quota_[kArray] = spec.type_mix.array_share * static_cast<double>(spec.target_fields);
        quota_[kObject] = spec.type_mix.object_share * static_cast<double>(spec.target_fields);
    }

    DocumentTree build() {
        arena_.push_back(GenNode{});
        arena_[0].type = NodeType::Object;
        arena_[0].depth = 1;
        arena_[0].member_cap = 5 + rng_() % 6; // thin root
        hosts_.push_back(0);

        build_spine();
        while (fields_used_ < spec_.target_fields) {
            grow();
        }

        DocumentTree tree;
        tree.root = materialize(0);
        tree.finalize();
        return tree;
    }

private:
    void build_spine() {
        std::size_t cur = 0;
        for (std::size_t depth = 2; depth + 1 <= spec_.target_depth; ++depth) {
            const std::size_t obj = add_child(cur, NodeType::Object, true);
            used_[kObject] += 1;
            ++fields_used_;
            hosts_.push_back(obj);
            cur = obj;
        }
        // deepest node of the spine is a primitive member
        add_string_member(cur);
    }

    std::size_t member_count(std::size_t idx) const { return arena_[idx].children.size(); }

    // Host choice prefers free capacity and depth; containers additionally
    // need room for their own children below them.
    std::size_t pick_host(bool for_container) {
        double total = 0.0;
        std::vector<double> weights(hosts_.size(), 0.0);
        for (int pass = 0; pass < 2 && total <= 0.0; ++pass) {
            for (std::size_t h = 0; h < hosts_.size(); ++h) {
                const GenNode& node = arena_[hosts_[h]];
                if (for_container && node.depth + 2 > spec_.target_depth) continue;
                if (pass == 0 && member_count(hosts_[h]) >= node.member_cap) continue;
                weights[h] = static_cast<double>(node.depth * node.depth);
                total += weights[h];
            }
        }
        const double r = unit_double(rng_) * total;
        double acc = 0.0;
        for (std::size_t h = 0; h < hosts_.size(); ++h) {
            acc += weights[h];
            if (weights[h] > 0.0 && r < acc) return hosts_[h];
        }
        return hosts_[0];
    }

    void grow() {
        const std::size_t budget = spec_.target_fields - fields_used_;
        const bool container_possible = spec_.target_depth >= 3;
        double weights[4] = {deficit(kString), deficit(kInteger),
                             container_possible ? deficit(kArray) : 0.0,
                             (container_possible && budget >= 2) ? deficit(kObject) : 0.0};
        double total = weights[0] + weights[1] + weights[2] + weights[3];
        if (total <= 0.0) {
            weights[0] = spec_.type_mix.string_share;
            weights[1] = spec_.type_mix.integer_share;
            weights[2] = 0.0;
            weights[3] = 0.0;
            total = weights[0] + weights[1];
        }
        const double r = unit_double(rng_) * total;
        int pick = kString;
        double acc = 0.0;
        for (int t = 0; t < 4; ++t) {
            acc += weights[t];
            if (r < acc) {
                pick = t;
                break;
            }
        }

        switch (pick) {
        case kString: add_string_member(pick_host(false)); break;
        case kInteger: add_integer_member(pick_host(false)); break;
        case kArray: add_array_member(pick_host(true)); break;
        case kObject: add_object_member(pick_host(true)); break;
        }
    }

    double deficit(int t) const { return std::max(quota_[t] - static_cast<double>(used_[t]), 0.0); }

    void add_string_member(std::size_t host) {
        const std::size_t idx = add_child(host, NodeType::String, true);
        arena_[idx].svalue = default_phrase_pool()[rng_() % default_phrase_pool().size()];
        used_[kString] += 1;
        ++fields_used_;
    }

    void add_integer_member(std::size_t host) {
        const std::size_t idx = add_child(host, NodeType::Number, true);
        arena_[idx].ivalue = static_cast<std::int64_t>(rng_() % 10000);
        used_[kInteger] += 1;
        ++fields_used_;
    }

    void add_array_member(std::size_t host) {
        const std::size_t arr = add_child(host, NodeType::Array, true);
        used_[kArray] += 1;
        ++fields_used_;
        const std::size_t elems = 2 + rng_() % 4;
        for (std::size_t e = 0; e < elems; ++e) {
            const std::size_t elem_depth = arena_[arr].depth + 1;
            const bool obj_ok = elem_depth + 1 <= spec_.target_depth &&
                                fields_used_ < spec_.target_fields && rng_() % 2 == 0;
            if (obj_ok) {
                // record-style element: hosts fields of its own
                const std::size_t obj = add_child(arr, NodeType::Object, false);
                hosts_.push_back(obj);
                add_string_member(obj); // objects are never left empty
            } else if (rng_() % 10 < 7) {
                const std::size_t s = add_child(arr, NodeType::String, false);
                arena_[s].svalue = default_phrase_pool()[rng_() % default_phrase_pool().size()];
            } else {
                const std::size_t n = add_child(arr, NodeType::Number, false);
                arena_[n].ivalue = static_cast<std::int64_t>(rng_() % 10000);
            }
        }
    }

    void add_object_member(std::size_t host) {
        const std::size_t obj = add_child(host, NodeType::Object, true);
        used_[kObject] += 1;
        ++fields_used_;
        hosts_.push_back(obj);
        add_string_member(obj);
    }

    std::size_t add_child(std::size_t parent, NodeType type, bool labeled) {
        GenNode node;
        node.type = type;
        node.depth = arena_[parent].depth + 1;
        if (type == NodeType::Object) {
            node.member_cap = 4 + rng_() % 8;
        }
        if (labeled) {
            node.label = fresh_key(parent);
            node.labeled = true;
        }
        arena_.push_back(std::move(node));
        const std::size_t idx = arena_.size() - 1;
        arena_[parent].children.push_back(idx);
        return idx;
    }

    std::string fresh_key(std::size_t object_idx) {
        const auto& pool = default_key_pool();
        GenNode& obj = arena_[object_idx];
        const std::size_t start = rng_() % pool.size();
        for (std::size_t probe = 0; probe < pool.size(); ++probe) {
            const std::string& key = pool[(start + probe) % pool.size()];
            if (obj.used_keys.insert(key).second) {
                return key;
            }
        }
        std::string key = "extra_field_" + std::to_string(synth_counter_++);
        obj.used_keys.insert(key);
        return key;
    }

    TreeNode materialize(std::size_t idx) const {
        const GenNode& g = arena_[idx];
        TreeNode node;
        switch (g.type) {
        case NodeType::Object: node = TreeNode::make_object(); break;
        case NodeType::Array: node = TreeNode::make_array(); break;
        case NodeType::String: node = TreeNode::make_string(g.svalue); break;
        case NodeType::Number: node = TreeNode::make_integer(g.ivalue); break;
        case NodeType::Boolean: node = TreeNode::make_boolean(false); break;
        case NodeType::Null: node = TreeNode::make_null(); break;
        }
        if (g.labeled) node.label = g.label;
        for (std::size_t c : g.children) {
            node.children.push_back(materialize(c));
        }
        return node;
    }

    const BaseDocSpec& spec_;
    std::mt19937_64 rng_;
    std::deque<GenNode> arena_;
    std::vector<std::size_t> hosts_;
    double quota_[4] = {0, 0, 0, 0};
    std::size_t used_[4] = {0, 0, 0, 0};
    std::size_t fields_used_ = 0;
    std::size_t synth_counter_ = 0;
};

} // namespace

DocumentTree gen_base_document(const BaseDocSpec& spec) {
    spec.type_mix.validate();
    if (spec.target_depth < 2 || spec.target_depth > 7) {
        throw InfeasibleSpec("target_depth must be in [2,7]");
    }
    if (spec.target_fields < 4 || spec.target_fields > 228) {
        throw InfeasibleSpec("target_fields must be in [4,228]");
    }
    if (spec.target_fields < spec.target_depth - 1) {
        throw InfeasibleSpec("too few fields to reach target depth " +
                             std::to_string(spec.target_depth));
    }
    DocBuilder builder(spec);
    return builder.build();
}

std::vector<BaseDocSpec> sample_base_specs(std::size_t count, std::uint64_t master_seed,
                                           std::size_t min_depth) {
    std::mt19937_64 rng(master_seed);
    // depth distribution of the base corpus: mode 4, range 2-7
    const std::pair<std::size_t, double> depth_weights[] = {
        {2, 0.107}, {3, 0.093}, {4, 0.587}, {5, 0.173}, {6, 0.027}, {7, 0.013}};

    std::vector<BaseDocSpec> specs;
    specs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        BaseDocSpec spec;
        // resample until the depth floor is met, keeping the draw deterministic
        for (;;) {
            const double r = unit_double(rng);
            double acc = 0.0;
            std::size_t depth = 4;
            for (const auto& [d, w] : depth_weights) {
                acc += w;
                if (r < acc) {
                    depth = d;
                    break;
                }
            }
            if (depth >= min_depth) {
                spec.target_depth = depth;
                break;
            }
        }
        // heavy-tailed field count around a mean of ~42
        const double u1 = std::max(unit_double(rng), 1e-12);
        const double u2 = unit_double(rng);
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
        double fields = std::exp(3.45 + 0.75 * z);
        fields = std::clamp(fields, 4.0, 228.0);
        spec.target_fields = std::max<std::size_t>(static_cast<std::size_t>(std::lround(fields)),
                                                   spec.target_depth - 1);
        spec.target_fields = std::clamp<std::size_t>(spec.target_fields, 4, 228);
        spec.seed = rng();
        specs.push_back(spec);
    }
    return specs;
}

namespace {

struct Site {
    TreeNode* node;
    TreeNode* parent;
};

void collect_sites(TreeNode& node, TreeNode* parent, std::vector<Site>& out,
                   bool (*pred)(const TreeNode&, const TreeNode*, const void*), const void* arg) {
    if (pred(node, parent, arg)) {
        out.push_back({&node, parent});
    }
    for (TreeNode& child : node.children) {
        collect_sites(child, &node, out, pred, arg);
    }
}

std::vector<std::size_t> choose_prefix(std::size_t n, double ratio, std::uint64_t seed) {
    if (ratio < 0.0 || ratio > 1.0) {
        throw std::invalid_argument("ratio must be in [0,1]");
    }
    const std::size_t k = round_half_up(ratio * static_cast<double>(n));
    std::vector<std::size_t> order = seeded_permutation(n, seed);
    order.resize(std::min(k, n));
    return order;
}

} // namespace

DocumentTree apply_field_rename(const DocumentTree& doc, double ratio,
                                const std::map<std::string, std::string>& table,
                                std::uint64_t seed) {
    DocumentTree out = doc;
    struct Arg {
        const std::map<std::string, std::string>* table;
    } arg{&table};
    std::vector<Site> sites;
    collect_sites(
        out.root, nullptr, sites,
        [](const TreeNode& n, const TreeNode* parent, const void* raw) {
            const auto* a = static_cast<const Arg*>(raw);
            if (!parent || parent->type != NodeType::Object || !n.label) return false;
            auto it = a->table->find(*n.label);
            if (it == a->table->end()) return false;
            // skip a rename that would collide with a sibling key
            for (const TreeNode& sib : parent->children) {
                if (sib.label && *sib.label == it->second) return false;
            }
            return true;
        },
        &arg);
    if (sites.empty()) {
        throw NoEligibleKeys("no keys match the synonym table");
    }
    for (std::size_t idx : choose_prefix(sites.size(), ratio, seed)) {
        sites[idx].node->label = table.at(*sites[idx].node->label);
    }
    out.finalize();
    return out;
}

DocumentTree apply_expression_variation(const DocumentTree& doc, double ratio,
                                        const std::map<std::string, std::string>& table,
                                        std::uint64_t seed) {
    DocumentTree out = doc;
    struct Arg {
        const std::map<std::string, std::string>* table;
    } arg{&table};
    std::vector<Site> sites;
    collect_sites(
        out.root, nullptr, sites,
        [](const TreeNode& n, const TreeNode*, const void* raw) {
            const auto* a = static_cast<const Arg*>(raw);
            return n.type == NodeType::String && a->table->count(n.string_value) > 0;
        },
        &arg);
    if (sites.empty()) {
        throw NoEligibleValues("no string values match the paraphrase table");
    }
    for (std::size_t idx : choose_prefix(sites.size(), ratio, seed)) {
        sites[idx].node->string_value = table.at(sites[idx].node->string_value);
    }
    out.finalize();
    return out;
}

DocumentTree apply_semantic_variation(const DocumentTree& doc, double ratio,
                                      const SubstitutionPool& pool, std::uint64_t seed) {
    if (pool.empty()) {
        throw EmptyPool("substitution pool is empty");
    }
    DocumentTree out = doc;
    struct Arg {
        const SubstitutionPool* pool;
    } arg{&pool};
    std::vector<Site> sites;
    collect_sites(
        out.root, nullptr, sites,
        [](const TreeNode& n, const TreeNode*, const void* raw) {
            const auto* a = static_cast<const Arg*>(raw);
            if (n.type == NodeType::String) return !a->pool->strings.empty();
            if (n.type == NodeType::Number) return !a->pool->numbers.empty();
            return false;
        },
        &arg);
    std::mt19937_64 rng(mix_seed(seed, 0x5eed));
    for (std::size_t idx : choose_prefix(sites.size(), ratio, seed)) {
        TreeNode& node = *sites[idx].node;
        if (node.type == NodeType::String) {
            std::size_t i = rng() % pool.strings.size();
            if (pool.strings[i] == node.string_value) i = (i + 1) % pool.strings.size();
            node.string_value = pool.strings[i];
        } else {
            std::size_t i = rng() % pool.numbers.size();
            if (static_cast<long double>(pool.numbers[i]) == node.number_value) {
                i = (i + 1) % pool.numbers.size();
            }
            const std::string text = std::to_string(pool.numbers[i]);
            node.number_text = text;
            node.number_value = static_cast<long double>(pool.numbers[i]);
        }
    }
    out.finalize();
    return out;
}

namespace {

void flatten_into(const TreeNode& source, const std::string& prefix, TreeNode& root,
                  std::vector<std::string>& warnings) {
    for (const TreeNode& member : source.children) {
        const std::string joined =
            prefix.empty() ? member.label.value_or("") : prefix + "_" + member.label.value_or("");
        if (member.type == NodeType::Object) {
            flatten_into(member, joined, root, warnings);
            continue;
        }
        TreeNode moved = member;
        std::string key = joined;
        int suffix = 2;
        auto taken = [&](const std::string& k) {
            return std::any_of(root.children.begin(), root.children.end(),
                               [&](const TreeNode& c) { return c.label && *c.label == k; });
        };
        while (taken(key)) {
            key = joined + "_" + std::to_string(suffix++);
        }
        if (key != joined) {
            warnings.push_back("flatten collision on \"" + joined + "\", renamed to \"" + key +
                               "\"");
        }
        moved.label = key;
        root.children.push_back(std::move(moved));
    }
}

} // namespace

DocumentTree flatten_structure(const DocumentTree& doc) {
    if (doc.root.type != NodeType::Object) {
        throw std::invalid_argument("flatten_structure requires an object root");
    }
    DocumentTree out;
    out.root = TreeNode::make_object();
    flatten_into(doc.root, "", out.root, out.warnings);
    out.finalize();
    return out;
}

DocumentTree nest_structure(const DocumentTree& doc, const Grouping& grouping) {
    if (doc.root.type != NodeType::Object) {
        throw std::invalid_argument("nest_structure requires an object root");
    }
    std::set<std::string> root_keys;
    for (const TreeNode& member : doc.root.children) {
        root_keys.insert(member.label.value_or(""));
    }
    std::set<std::string> grouped;
    std::set<std::string> group_names;
    for (const auto& [name, keys] : grouping) {
        if (!group_names.insert(name).second) {
            throw OverlappingGroups("duplicate group name \"" + name + "\"");
        }
        for (const std::string& key : keys) {
            if (!root_keys.count(key)) {
                throw UnknownKey("grouped key \"" + key + "\" not found at root");
            }
            if (!grouped.insert(key).second) {
                throw OverlappingGroups("key \"" + key + "\" listed in more than one group");
            }
        }
    }
    for (const auto& [name, keys] : grouping) {
        if (root_keys.count(name) && !grouped.count(name)) {
            throw std::invalid_argument("group name \"" + name + "\" collides with a root key");
        }
    }

    DocumentTree out;
    out.root = TreeNode::make_object();
    for (const TreeNode& member : doc.root.children) {
        if (!grouped.count(member.label.value_or(""))) {
            out.root.children.push_back(member);
        }
    }
    for (const auto& [name, keys] : grouping) {
        TreeNode group = TreeNode::make_object();
        group.label = name;
        for (const std::string& key : keys) {
            for (const TreeNode& member : doc.root.children) {
                if (member.label.value_or("") == key) {
                    group.children.push_back(member);
                    break;
                }
            }
        }
        out.root.children.push_back(std::move(group));
    }
    out.finalize();
    return out;
}

Grouping auto_grouping(const DocumentTree& doc, std::uint64_t seed) {
    static const char* kGroupNames[] = {"details", "metadata", "attributes", "profile",
                                        "settings", "context",  "properties", "section",
                                        "bundle",  "extras"};
    std::set<std::string> root_keys;
    std::vector<std::string> ordered_keys;
    for (const TreeNode& member : doc.root.children) {
        root_keys.insert(member.label.value_or(""));
        ordered_keys.push_back(member.label.value_or(""));
    }
    std::mt19937_64 rng(mix_seed(seed, 0x6e57));
    Grouping grouping;
    std::size_t pos = 0;
    std::size_t name_idx = 0;
    while (pos < ordered_keys.size()) {
        const std::size_t size = std::min<std::size_t>(2 + rng() % 4, ordered_keys.size() - pos);
        std::string name;
        do {
            name = name_idx < std::size(kGroupNames)
                       ? kGroupNames[name_idx]
                       : "group_" + std::to_string(name_idx);
            ++name_idx;
        } while (root_keys.count(name));
        std::vector<std::string> keys(ordered_keys.begin() + pos,
                                      ordered_keys.begin() + pos + size);
        grouping.emplace_back(std::move(name), std::move(keys));
        pos += size;
    }
    return grouping;
}

DocumentTree apply_variation(const DocumentTree& doc, const VariationSpec& spec) {
    switch (spec.kind) {
    case VariationKind::FieldRename:
        return apply_field_rename(doc, spec.ratio, spec.synonym_table, spec.seed);
    case VariationKind::Expression:
        return apply_expression_variation(doc, spec.ratio, spec.paraphrase_table, spec.seed);
    case VariationKind::Semantic:
        return apply_semantic_variation(doc, spec.ratio, spec.substitution_pool, spec.seed);
    case VariationKind::Flatten:
        return flatten_structure(doc);
    case VariationKind::Nest:
        return nest_structure(doc, auto_grouping(doc, spec.seed));
    }
    throw std::invalid_argument("unknown variation kind");
}

namespace {

void shuffle_children(TreeNode& node, std::mt19937_64& rng) {
    for (std::size_t i = node.children.size(); i > 1; --i) {
        const std::size_t j = rng() % i;
        std::swap(node.children[i - 1], node.children[j]);
    }
    for (TreeNode& child : node.children) {
        shuffle_children(child, rng);
    }
}

} // namespace

DocumentTree shuffle_order(const DocumentTree& doc, std::uint64_t seed) {
    DocumentTree out = doc;
    std::mt19937_64 rng(mix_seed(seed, 0x04de4));
    shuffle_children(out.root, rng);
    out.finalize();
    return out;
}

namespace {

std::string format_case_id(std::size_t index, VariationKind kind, double ratio) {
    char buf[64];
    if (variation_kind_is_gradual(kind)) {
        std::snprintf(buf, sizeof(buf), "%03zu-%s-r%.1f", index, variation_kind_name(kind), ratio);
    } else {
        std::snprintf(buf, sizeof(buf), "%03zu-%s", index, variation_kind_name(kind));
    }
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

} // namespace

std::vector<CorpusCase> generate_corpus(const std::filesystem::path& out_dir,
                                        const CorpusOptions& options) {
    std::vector<VariationKind> kinds = options.kinds;
    if (kinds.empty()) {
        kinds = {VariationKind::FieldRename, VariationKind::Expression, VariationKind::Semantic,
                 VariationKind::Flatten, VariationKind::Nest};
    }
    std::vector<double> ratios = options.ratios;
    if (ratios.empty()) {
        for (int i = 1; i <= 10; ++i) ratios.push_back(i / 10.0);
    }

    std::filesystem::create_directories(out_dir / "base");
    std::filesystem::create_directories(out_dir / "variants");

    const std::vector<BaseDocSpec> specs =
        sample_base_specs(options.count, options.seed, options.min_depth);

    std::vector<CorpusCase> cases;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const DocumentTree base = gen_base_document(specs[i]);
        char base_name[32];
        std::snprintf(base_name, sizeof(base_name), "base/base_%03zu.json", i);
        write_text_file(out_dir / base_name, serialize(base, 2));

        for (VariationKind kind : kinds) {
            VariationSpec vspec;
            vspec.kind = kind;
            vspec.seed = mix_seed(specs[i].seed, static_cast<std::uint64_t>(kind) + 101);
            vspec.synonym_table = default_synonym_table();
            vspec.paraphrase_table = default_paraphrase_table();
            vspec.substitution_pool = default_substitution_pool();

            const std::vector<double> kind_ratios =
                variation_kind_is_gradual(kind) ? ratios : std::vector<double>{0.0};
            for (double ratio : kind_ratios) {
                vspec.ratio = ratio;
                DocumentTree variant;
                try {
                    variant = apply_variation(base, vspec);
                } catch (const NoEligibleKeys&) {
                    variant = base; // no eligible sites: the variant equals the base
                } catch (const NoEligibleValues&) {
                    variant = base;
                }
                CorpusCase c;
                c.case_id = format_case_id(i, kind, ratio);
                c.base_seed = specs[i].seed;
                c.kind = variation_kind_name(kind);
                c.ratio = variation_kind_is_gradual(kind) ? ratio : 0.0;
                c.base_path = base_name;
                c.variant_path = "variants/" + c.case_id + ".json";
                write_text_file(out_dir / c.variant_path, serialize(variant, 2));
                cases.push_back(std::move(c));
            }
        }
    }
    write_manifest(out_dir / "manifest.jsonl", cases);
    return cases;
}

void write_manifest(const std::filesystem::path& manifest_path,
                    const std::vector<CorpusCase>& cases) {
    std::string out;
    for (const CorpusCase& c : cases) {
        nlohmann::ordered_json row;
        row["case_id"] = c.case_id;
        row["base_seed"] = c.base_seed;
        row["kind"] = c.kind;
        row["ratio"] = c.ratio;
        row["base_path"] = c.base_path;
        row["variant_path"] = c.variant_path;
        out += row.dump();
        out += '\n';
    }
    write_text_file(manifest_path, out);
}

std::vector<CorpusCase> read_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open manifest: " + manifest_path.string());
    }
    std::vector<CorpusCase> cases;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
        if (row.is_discarded() || !row.is_object() || !row.contains("case_id") ||
            !row.contains("kind") || !row.contains("base_path") || !row.contains("variant_path")) {
            throw std::runtime_error("malformed manifest line " + std::to_string(line_no));
        }
        CorpusCase c;
        c.case_id = row["case_id"].get<std::string>();
        c.base_seed = row.value("base_seed", 0ULL);
        c.kind = row["kind"].get<std::string>();
        c.ratio = row.value("ratio", 0.0);
        c.base_path = row["base_path"].get<std::string>();
        c.variant_path = row["variant_path"].get<std::string>();
        cases.push_back(std::move(c));
    }
    return cases;
}

} // namespace sted
