#include "sted/semantic.hpp"

#include "sted/errors.hpp"
#include "sted/tree.hpp"

#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace sted;
namespace fs = std::filesystem;

namespace {

// Test-local re-implementation of the pinned embedding scheme, kept
// independent of the library code path it checks.
std::vector<double> oracle_embed(const std::string& text) {
    auto word_char = [](unsigned char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c >= 0x80;
    };
    std::string collapsed;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (word_char(c)) {
            if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
            collapsed += static_cast<char>(c);
        } else if (!collapsed.empty() && collapsed.back() != ' ') {
            collapsed += ' ';
        }
    }
    while (!collapsed.empty() && collapsed.back() == ' ') collapsed.pop_back();

    auto fnv = [](const std::string& s) {
        std::uint64_t h = 14695981039346656037ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return h;
    };
    std::vector<double> v(256, 0.0);
    auto add = [&](const std::string& f) { v[fnv(f) % 256] += 1.0; };

    std::string token;
    for (char c : collapsed + " ") {
        if (c == ' ') {
            if (!token.empty()) add("w\x1f" + token);
            token.clear();
        } else {
            token += c;
        }
    }
    if (collapsed.size() < 3) {
        add("t\x1f" + collapsed);
    } else {
        for (std::size_t i = 0; i + 3 <= collapsed.size(); ++i) {
            add("t\x1f" + collapsed.substr(i, 3));
        }
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0) {
        for (double& x : v) x /= norm;
    }
    return v;
}

double oracle_cosine(const std::string& a, const std::string& b) {
    const auto va = oracle_embed(a);
    const auto vb = oracle_embed(b);
    double dot = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) dot += va[i] * vb[i];
    return dot;
}

TreeNode leaf_number(const std::string& text) { return TreeNode::make_number(text); }

} // namespace

TEST_CASE("normalize_field_name") {
    CHECK(normalize_field_name("userName") == "user name");
    CHECK(normalize_field_name("user_name") == "user name");
    CHECK(normalize_field_name("id") == "id");
    CHECK(normalize_field_name("HTTPResponseCode") == "http response code");
    CHECK(normalize_field_name("user-name") == "user name");
    CHECK(normalize_field_name("field1") == "field 1");
    CHECK(normalize_field_name("v2Id") == "v 2 id");
    CHECK(normalize_field_name("  spaced  out ") == "spaced out");
    CHECK_THROWS_AS(normalize_field_name(""), EmptyName);
}

TEST_CASE("normalization is idempotent") {
    const std::vector<std::string> names = {"userName",  "HTTPResponseCode", "a_bC-d2E",
                                            "SCREAMING", "camelCase99",      "x"};
    for (const std::string& n : names) {
        const std::string once = normalize_field_name(n);
        CHECK(normalize_field_name(once) == once);
    }
}

TEST_CASE("deterministic provider") {
    SUBCASE("identical inputs give identical vectors") {
        const EmbeddingVector a = DeterministicProvider::embed_one("abc", 256);
        const EmbeddingVector b = DeterministicProvider::embed_one("abc", 256);
        CHECK(a.components == b.components);
    }
    SUBCASE("unit norm") {
        const EmbeddingVector v = DeterministicProvider::embed_one("abc", 256);
        double norm = 0.0;
        for (float f : v.components) norm += static_cast<double>(f) * f;
        CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("agrees with the independent oracle") {
        const EmbeddingVector v = DeterministicProvider::embed_one("user name", 256);
        const auto expect = oracle_embed("user name");
        REQUIRE(v.dimension() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) {
            CHECK(v.components[i] == doctest::Approx(expect[i]).epsilon(1e-6));
        }
    }
    SUBCASE("user name vs username") {
        const double expected = oracle_cosine("user name", "username");
        CHECK(expected > 0.5);
        const double got = cosine01(DeterministicProvider::embed_one("user name", 256),
                                    DeterministicProvider::embed_one("username", 256));
        CHECK(got == doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("text_similarity") {
    SimilarityContext ctx;
    SUBCASE("identical text") { CHECK(text_similarity("hello", "hello", ctx) == 1.0); }
    SUBCASE("both empty") { CHECK(text_similarity("", "", ctx) == 1.0); }
    SUBCASE("one empty") {
        CHECK(text_similarity("", "x", ctx) == 0.0);
        CHECK(text_similarity("x", "", ctx) == 0.0);
    }
    SUBCASE("long text against itself chunks cleanly") {
        std::string text;
        while (text.size() < 700) text += "the quick brown fox jumps over the lazy dog ";
        text.resize(700);
        CHECK(text_similarity(text, text, ctx) == doctest::Approx(1.0).epsilon(1e-6));
        // shifted copy still scores high through best-chunk matching
        std::string shifted = "prefix prefix prefix " + text;
        CHECK(text_similarity(text, shifted, ctx) > 0.8);
    }
    SUBCASE("symmetry is exact") {
        const std::vector<std::pair<std::string, std::string>> pairs = {
            {"user name", "username"},
            {"operation completed successfully", "operation finished successfully"},
            {std::string(450, 'a') + " tail one", std::string(310, 'a') + " other tail"},
        };
        for (const auto& [a, b] : pairs) {
            SimilarityContext fresh;
            const double ab = text_similarity(a, b, fresh);
            const double ba = text_similarity(b, a, fresh);
            CHECK(ab == ba);
            CHECK(ab >= 0.0);
            CHECK(ab <= 1.0);
        }
    }
}

TEST_CASE("scalar_similarity") {
    SimilarityContext ctx;
    SUBCASE("numbers compare on normalized value") {
        CHECK(scalar_similarity(leaf_number("123"), leaf_number("123.0"), ctx) == 1.0);
        CHECK(scalar_similarity(leaf_number("123"), leaf_number("124"), ctx) == 0.0);
    }
    SUBCASE("coercible cross-type pairs pay the penalty") {
        CHECK(scalar_similarity(TreeNode::make_string("true"), TreeNode::make_boolean(true), ctx) ==
              doctest::Approx(0.8));
        CHECK(scalar_similarity(TreeNode::make_string("123"), leaf_number("123"), ctx) ==
              doctest::Approx(0.8));
        CHECK(scalar_similarity(TreeNode::make_string("124"), leaf_number("123"), ctx) == 0.0);
    }
    SUBCASE("strict policy disables coercion") {
        ScalarComparisonPolicy strict;
        strict.coercion_enabled = false;
        SimilarityContext strict_ctx(nullptr, nullptr, strict);
        CHECK(scalar_similarity(TreeNode::make_string("true"), TreeNode::make_boolean(true),
                                strict_ctx) == 0.0);
    }
    SUBCASE("identity and incompatible pairs") {
        CHECK(scalar_similarity(TreeNode::make_null(), TreeNode::make_null(), ctx) == 1.0);
        CHECK(scalar_similarity(leaf_number("5"), TreeNode::make_string("hello"), ctx) == 0.0);
        CHECK(scalar_similarity(TreeNode::make_boolean(true), TreeNode::make_boolean(false), ctx) ==
              0.0);
        CHECK(scalar_similarity(TreeNode::make_null(), TreeNode::make_boolean(false), ctx) == 0.0);
    }
    SUBCASE("identity for any leaf") {
        const std::vector<TreeNode> leaves = {TreeNode::make_string("x"), leaf_number("3.5"),
                                              TreeNode::make_boolean(true), TreeNode::make_null()};
        for (const TreeNode& leaf : leaves) {
            CHECK(scalar_similarity(leaf, leaf, ctx) == 1.0);
        }
    }
    SUBCASE("containers are rejected") {
        CHECK_THROWS_AS(scalar_similarity(TreeNode::make_object(), leaf_number("1"), ctx),
                        NotALeaf);
    }
}

TEST_CASE("embedding cache") {
    const fs::path dir = fs::temp_directory_path() / "sted_cache_test";
    fs::remove_all(dir);

    EmbeddingProviderSpec spec;
    DeterministicProvider provider(spec);

    SUBCASE("warm hits are bit-identical and survive reopen") {
        EmbeddingCache cache(dir);
        const EmbeddingVector cold = embed_text("some text", provider, cache);
        const EmbeddingVector warm = embed_text("some text", provider, cache);
        CHECK(cold.components == warm.components);

        EmbeddingCache reopened(dir);
        EmbeddingVector from_disk;
        REQUIRE(reopened.lookup(spec.provider_id, spec.model_id, "some text", from_disk));
        CHECK(from_disk.components == cold.components);
    }

    SUBCASE("on-disk record layout: meta JSON, 4-byte dimension, f32 LE") {
        EmbeddingCache cache(dir);
        const EmbeddingVector v = embed_text("layout probe", provider, cache);
        const std::string hash =
            EmbeddingCache::content_hash(spec.provider_id, spec.model_id, "layout probe");
        std::ifstream in(dir / (hash + ".emb"), std::ios::binary);
        REQUIRE(in.good());
        std::uint32_t meta_len = 0;
        in.read(reinterpret_cast<char*>(&meta_len), 4);
        std::string meta(meta_len, '\0');
        in.read(meta.data(), meta_len);
        CHECK(meta.find("\"provider_id\"") != std::string::npos);
        CHECK(meta.find(hash) != std::string::npos);
        std::uint32_t dim = 0;
        in.read(reinterpret_cast<char*>(&dim), 4);
        CHECK(dim == 256);
        std::vector<float> stored(dim);
        in.read(reinterpret_cast<char*>(stored.data()), 4 * dim);
        REQUIRE(in.good());
        CHECK(stored == v.components);
    }

    SUBCASE("stats and explicit clear") {
        EmbeddingCache cache(dir);
        embed_text("one", provider, cache);
        embed_text("two", provider, cache);
        CHECK(cache.disk_stats().entries == 2);
        CHECK(cache.disk_stats().bytes > 0);
        cache.clear();
        CHECK(cache.disk_stats().entries == 0);
    }

    SUBCASE("similarity is cache-transparent") {
        double cold = 0.0;
        {
            EmbeddingCache cache(dir);
            SimilarityContext ctx(std::make_shared<DeterministicProvider>(), nullptr, {});
            cold = text_similarity("alpha beta", "alpha gamma", provider, cache, {});
        }
        EmbeddingCache warm_cache(dir);
        const double warm = text_similarity("alpha beta", "alpha gamma", provider, warm_cache, {});
        CHECK(cold == warm);
    }

    fs::remove_all(dir);
}

TEST_CASE("provider spec validation") {
    EmbeddingProviderSpec spec;
    spec.kind = ProviderKind::RemoteHttp;
    spec.endpoint = "";
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.kind = ProviderKind::DeterministicLocal;
    spec.endpoint = "http://example.invalid";
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.endpoint.clear();
    CHECK_NOTHROW(spec.validate());
}

TEST_CASE("scalar policy validation") {
    ScalarComparisonPolicy p;
    p.coercion_penalty = 1.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.coercion_penalty = 0.2;
    p.chunk_overlap_chars = 400;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
