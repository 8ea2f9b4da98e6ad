#include "sted/ted.hpp"

#include "sted/semantic.hpp"
#include "sted/sted.hpp"
#include "sted/tree.hpp"
#include "sted/variation.hpp"

#include "doctest.h"

#include <cmath>

using namespace sted;

TEST_CASE("identity") {
    const DocumentTree t = parse_document(R"({"a": 1, "b": [1, {"c": "x"}]})");
    CHECK(ted_similarity(t, t) == 1.0);
}

TEST_CASE("positional comparison punishes key reordering") {
    // two-key object by hand: both positional pairs mismatch on label,
    // so the level cost is 2/2 and the similarity is 0
    const DocumentTree a = parse_document(R"({"a": 1, "b": 2})");
    const DocumentTree b = parse_document(R"({"b": 2, "a": 1})");
    const double s = ted_similarity(a, b);
    CHECK(s < 1.0);
    CHECK(s == 0.0);
}

TEST_CASE("value changes count") {
    const DocumentTree a = parse_document(R"({"a": 1, "b": 2})");
    const DocumentTree b = parse_document(R"({"a": 1, "b": 3})");
    // one mismatched pair out of two children
    CHECK(ted_similarity(a, b) == doctest::Approx(0.5));
}

TEST_CASE("symmetry with equal insert and delete costs") {
    const DocumentTree a = parse_document(R"({"a": 1, "b": {"c": 2}, "d": [1, 2, 3]})");
    const DocumentTree b = parse_document(R"({"a": 2, "b": {"c": 2, "e": 4}})");
    CHECK(std::abs(ted_similarity(a, b) - ted_similarity(b, a)) <= 1e-12);
}

TEST_CASE("flattening reads as a complete change") {
    const DocumentTree nested = parse_document(R"({"user": {"name": "John", "age": 30}})");
    const DocumentTree flat = parse_document(R"({"user_name": "John", "user_age": 30})");
    CHECK(ted_similarity(nested, flat) == 0.0);
}

TEST_CASE("rename differential: TED degrades more than STED") {
    SimilarityContext ctx;
    const StedConfig cfg = StedConfig::for_mode(Mode::Hybrid);

    BaseDocSpec spec;
    spec.target_depth = 4;
    spec.target_fields = 48;
    spec.seed = 31337;
    const DocumentTree doc = gen_base_document(spec);
    const DocumentTree renamed = apply_field_rename(doc, 1.0, default_synonym_table(), 9);

    const double sted_drop = 1.0 - sted_similarity(doc, renamed, cfg, ctx).score;
    const double ted_drop = 1.0 - ted_similarity(doc, renamed);
    CHECK(ted_drop > sted_drop);
    CHECK(ted_similarity(doc, renamed) < 1.0);
}

TEST_CASE("report carries the ted metric tag and the shared shape") {
    const DocumentTree a = parse_document(R"({"a": 1})");
    const DocumentTree b = parse_document(R"({"a": 2, "b": 3})");
    const SimilarityResult r = ted_report(a, b);
    CHECK(r.metric == "ted");
    REQUIRE(r.differences.size() == 2);
    CHECK(r.differences[0].path == "$.a");
    CHECK(r.differences[0].kind == DiffKind::ValueChanged);
    CHECK(r.differences[1].path == "$.b");
    CHECK(r.differences[1].kind == DiffKind::Extra);
    CHECK(r.to_json().find("\"metric\":\"ted\"") != std::string::npos);
}

TEST_CASE("scores stay in range on generated pairs") {
    const auto specs = sample_base_specs(10, 5150);
    std::vector<DocumentTree> docs;
    for (const auto& s : specs) docs.push_back(gen_base_document(s));
    for (std::size_t i = 0; i + 1 < docs.size(); ++i) {
        const double s = ted_similarity(docs[i], docs[i + 1]);
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
    }
}
