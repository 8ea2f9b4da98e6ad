#ifndef STED_VARIATION_HPP
#define STED_VARIATION_HPP

#include "sted/tree.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sted {

/// Share of object-member value types in generated documents.
struct TypeMix {
    double string_share = 0.682;
    double integer_share = 0.184;
    double array_share = 0.085;
    double object_share = 0.049;

    void validate() const; // shares sum to 1 within 1e-9
};

struct BaseDocSpec {
    std::size_t target_depth = 4;  // in [2,7]
    std::size_t target_fields = 42; // in [4,228]
    TypeMix type_mix;
    std::uint64_t seed = 0;
};

enum class VariationKind { FieldRename, Expression, Semantic, Flatten, Nest };

const char* variation_kind_name(VariationKind kind);
VariationKind variation_kind_from_name(const std::string& name);
bool variation_kind_is_gradual(VariationKind kind);

struct SubstitutionPool {
    std::vector<std::string> strings;
    std::vector<std::int64_t> numbers;
    bool empty() const { return strings.empty() && numbers.empty(); }
};

struct VariationSpec {
    VariationKind kind = VariationKind::FieldRename;
    double ratio = 1.0; // one of the ten levels 0.1..1.0; ignored for flatten/nest
    std::uint64_t seed = 0;
    std::map<std::string, std::string> synonym_table;
    std::map<std::string, std::string> paraphrase_table;
    SubstitutionPool substitution_pool;
};

/// Built-in deterministic tables so the full sweep runs with no external inputs.
const std::map<std::string, std::string>& default_synonym_table();
const std::map<std::string, std::string>& default_paraphrase_table();
const SubstitutionPool& default_substitution_pool();
const std::vector<std::string>& default_key_pool();
const std::vector<std::string>& default_phrase_pool();

/// Seeded synthetic document: exact target depth, exact field count, member
/// value types steered toward the mix. Same spec -> identical document.
/// Throws InfeasibleSpec when target_fields < target_depth - 1 or bounds are
/// violated.
DocumentTree gen_base_document(const BaseDocSpec& spec);

/// Draw `count` specs matching the observed corpus distributions
/// (depth mode 4, fields heavy-tailed around 42). min_depth trims the low end
/// for variation families that need nesting.
std::vector<BaseDocSpec> sample_base_specs(std::size_t count, std::uint64_t master_seed,
                                           std::size_t min_depth = 2);

/// Rename round(ratio * eligible sites) keys found in the table. Site choice
/// is a seeded shuffle and ratios take prefixes of it, so for one (doc, seed)
/// a higher ratio renames a superset of a lower one.
DocumentTree apply_field_rename(const DocumentTree& doc, double ratio,
                                const std::map<std::string, std::string>& table,
                                std::uint64_t seed);

/// Replace round(ratio * eligible sites) string values through the
/// paraphrase table; keys and structure untouched.
DocumentTree apply_expression_variation(const DocumentTree& doc, double ratio,
                                        const std::map<std::string, std::string>& table,
                                        std::uint64_t seed);

/// Replace round(ratio * eligible leaves) values with same-type pool draws.
DocumentTree apply_semantic_variation(const DocumentTree& doc, double ratio,
                                      const SubstitutionPool& pool, std::uint64_t seed);

/// Hoist every nested object member to the root under its underscore-joined
/// key path; arrays stay intact under their joined key. Collisions get a
/// numeric suffix and a warning.
DocumentTree flatten_structure(const DocumentTree& doc);

using Grouping = std::vector<std::pair<std::string, std::vector<std::string>>>;

/// Move the listed root keys under new group objects; ungrouped keys stay.
DocumentTree nest_structure(const DocumentTree& doc, const Grouping& grouping);

/// Partition all root keys into seeded groups of 2-5 for nest variants.
Grouping auto_grouping(const DocumentTree& doc, std::uint64_t seed);

/// Apply a variation spec (dispatch on kind; flatten/nest ignore ratio).
DocumentTree apply_variation(const DocumentTree& doc, const VariationSpec& spec);

/// Seeded recursive shuffle of every object's member order and every array's
/// element order; used to validate order invariance.
DocumentTree shuffle_order(const DocumentTree& doc, std::uint64_t seed);

/// One manifest row of a generated corpus.
struct CorpusCase {
    std::string case_id;
    std::uint64_t base_seed = 0;
    std::string kind;
    double ratio = 0.0;
    std::string base_path;    // relative to the manifest directory
    std::string variant_path;
};

struct CorpusOptions {
    std::size_t count = 75;
    std::vector<VariationKind> kinds; // empty = all five
    std::vector<double> ratios;       // empty = the ten levels for gradual kinds
    std::uint64_t seed = 0;
    std::size_t min_depth = 2;
};

/// Write base documents, variants and manifest.jsonl under out_dir.
/// Deterministic: same options -> byte-identical files.
std::vector<CorpusCase> generate_corpus(const std::filesystem::path& out_dir,
                                        const CorpusOptions& options);

void write_manifest(const std::filesystem::path& manifest_path,
                    const std::vector<CorpusCase>& cases);
std::vector<CorpusCase> read_manifest(const std::filesystem::path& manifest_path);

} // namespace sted

#endif // STED_VARIATION_HPP
