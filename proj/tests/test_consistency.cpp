#include "sted/consistency.hpp"

#include "sted/errors.hpp"
#include "sted/semantic.hpp"
#include "sted/tree.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

#include "json.hpp"

using namespace sted;

namespace {

SimilaritySet set_of(std::vector<double> values) {
    SimilaritySet s;
    s.values = std::move(values);
    s.n_outputs = 0;
    return s;
}

} // namespace

TEST_CASE("pairwise_similarities") {
    SimilarityContext ctx;
    const StedConfig cfg = StedConfig::for_mode(Mode::Hybrid);

    SUBCASE("pair counts") {
        std::vector<DocumentTree> two(2, parse_document(R"({"a": 1})"));
        CHECK(pairwise_similarities(two, cfg, ctx).values.size() == 1);

        std::vector<DocumentTree> ten(10, parse_document(R"({"a": 1})"));
        CHECK(pairwise_similarities(ten, cfg, ctx).values.size() == 45);
    }
    SUBCASE("identical outputs are all ones") {
        std::vector<DocumentTree> five(5, parse_document(R"({"a": [1, 2], "b": "x"})"));
        const SimilaritySet s = pairwise_similarities(five, cfg, ctx);
        REQUIRE(s.values.size() == 10);
        for (double v : s.values) CHECK(v == 1.0);
        CHECK(s.n_outputs == 5);
    }
    SUBCASE("parallel execution gives the same values") {
        std::vector<DocumentTree> docs;
        docs.push_back(parse_document(R"({"a": 1, "b": "x"})"));
        docs.push_back(parse_document(R"({"a": 2, "b": "x"})"));
        docs.push_back(parse_document(R"({"a": 1, "c": "y"})"));
        docs.push_back(parse_document(R"({"d": [1, 2, 3]})"));
        const SimilaritySet serial = pairwise_similarities(docs, cfg, ctx, 1);
        const SimilaritySet parallel = pairwise_similarities(docs, cfg, ctx, 4);
        CHECK(serial.values == parallel.values);
    }
}

TEST_CASE("mean_consistency") {
    CHECK(mean_consistency(set_of({0.8})) == doctest::Approx(0.8));
    CHECK(mean_consistency(set_of({1.0, 0.5, 0.75})) == doctest::Approx(0.75));
    CHECK(mean_consistency(set_of({1.0, 1.0, 1.0, 1.0})) == 1.0);
    CHECK_THROWS_AS(mean_consistency(set_of({})), EmptySet);
}

TEST_CASE("sigma_max: half zeros, half ones") {
    CHECK(sigma_max(2) == doctest::Approx(0.5));
    CHECK(sigma_max(3) == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));
    CHECK(sigma_max(4) == doctest::Approx(0.5));
    CHECK(sigma_max(5) == doctest::Approx(std::sqrt(6.0) / 5.0).epsilon(1e-12));
    CHECK_THROWS_AS(sigma_max(1), TooFew);
    CHECK_THROWS_AS(sigma_max(0), TooFew);
}

TEST_CASE("summary_stats") {
    SUBCASE("constant list") {
        const SummaryStats s = summary_stats({1.0, 1.0, 1.0});
        CHECK(s.mean == 1.0);
        CHECK(s.std_dev == 0.0);
        CHECK(s.min == 1.0);
        CHECK(s.max == 1.0);
        CHECK(s.median == 1.0);
    }
    SUBCASE("two points") {
        const SummaryStats s = summary_stats({0.0, 1.0});
        CHECK(s.mean == doctest::Approx(0.5));
        CHECK(s.std_dev == doctest::Approx(0.5));
        CHECK(s.median == doctest::Approx(0.5));
    }
    SUBCASE("odd-length median") { CHECK(summary_stats({0.2, 0.4, 0.9}).median == doctest::Approx(0.4)); }
    SUBCASE("empty list") { CHECK_THROWS_AS(summary_stats({}), EmptySet); }
}

TEST_CASE("consistency_score") {
    SUBCASE("constant values score exactly 1") {
        const ConsistencyReport r = consistency_score(set_of({0.9, 0.9, 0.9}));
        CHECK(r.consistency_score == 1.0);
        CHECK(r.sigma == 0.0);
        CHECK(r.mean_consistency == doctest::Approx(0.9));
    }
    SUBCASE("one or zero similarity values score exactly 1") {
        CHECK(consistency_score(set_of({})).consistency_score == 1.0);
        CHECK(consistency_score(set_of({0.4})).consistency_score == 1.0);
    }
    SUBCASE("extremal dispersion hits (1/3)^20") {
        const ConsistencyReport r = consistency_score(set_of({0.0, 1.0}));
        CHECK(r.sigma == doctest::Approx(0.5));
        CHECK(r.sigma_max == doctest::Approx(0.5));
        CHECK(r.sigma_hat == doctest::Approx(1.0));
        const double direct = std::pow(1.0 / 3.0, 20.0);
        CHECK(std::abs(r.consistency_score - direct) <= 1e-15);
        CHECK(r.consistency_score == doctest::Approx(2.867e-10).epsilon(1e-3));
    }
    SUBCASE("strictly decreasing in sigma_hat") {
        double prev = 2.0;
        for (int i = 0; i <= 100; ++i) {
            const double d = 0.5 * i / 100.0;
            const ConsistencyReport r = consistency_score(set_of({0.5 - d, 0.5 + d}));
            if (i > 0) CHECK(r.consistency_score < prev);
            prev = r.consistency_score;
        }
    }
    SUBCASE("duplicating an even-length list leaves the score unchanged") {
        const std::vector<double> base = {0.2, 0.9, 0.7, 0.4};
        std::vector<double> doubled = base;
        doubled.insert(doubled.end(), base.begin(), base.end());
        const ConsistencyReport a = consistency_score(set_of(base));
        const ConsistencyReport b = consistency_score(set_of(doubled));
        CHECK(a.sigma == doctest::Approx(b.sigma).epsilon(1e-12));
        CHECK(a.consistency_score == doctest::Approx(b.consistency_score).epsilon(1e-12));
    }
    SUBCASE("duplicating an odd-length list keeps sigma") {
        const std::vector<double> base = {0.2, 0.9, 0.7};
        std::vector<double> doubled = base;
        doubled.insert(doubled.end(), base.begin(), base.end());
        CHECK(consistency_score(set_of(base)).sigma ==
              doctest::Approx(consistency_score(set_of(doubled)).sigma).epsilon(1e-12));
    }
}

TEST_CASE("evaluate_consistency end to end") {
    SimilarityContext ctx;
    const StedConfig cfg;

    SUBCASE("identical outputs in any mode") {
        std::vector<DocumentTree> outputs(4, parse_document(R"({"a": 1, "b": [true, "x"]})"));
        for (Mode mode : {Mode::Structural, Mode::Semantic, Mode::Hybrid}) {
            const ConsistencyReport r = evaluate_consistency(outputs, mode, cfg, ctx);
            CHECK(r.consistency_score == 1.0);
            CHECK(r.mean_consistency == 1.0);
        }
    }
    SUBCASE("single output scores 1") {
        std::vector<DocumentTree> one(1, parse_document(R"({"a": 1})"));
        const ConsistencyReport r = evaluate_consistency(one, Mode::Hybrid, cfg, ctx);
        CHECK(r.consistency_score == 1.0);
        CHECK(r.n_outputs == 1);
    }
    SUBCASE("value-only drift: structural stays perfect, semantic drops") {
        std::vector<DocumentTree> outputs;
        outputs.push_back(parse_document(R"({"a": 1, "b": "alpha"})"));
        outputs.push_back(parse_document(R"({"a": 2, "b": "beta"})"));
        outputs.push_back(parse_document(R"({"a": 3, "b": "gamma"})"));
        const ConsistencyReport structural =
            evaluate_consistency(outputs, Mode::Structural, cfg, ctx);
        const ConsistencyReport semantic = evaluate_consistency(outputs, Mode::Semantic, cfg, ctx);
        CHECK(structural.consistency_score == 1.0);
        CHECK(structural.mean_consistency == 1.0);
        CHECK(semantic.mean_consistency < 1.0);
    }
    SUBCASE("key drift with equal content: structural mean below semantic mean") {
        std::vector<DocumentTree> outputs;
        outputs.push_back(parse_document(R"({"city": "NYC", "n": 1})"));
        outputs.push_back(parse_document(R"({"city": "NYC", "n": 1})"));
        outputs.push_back(parse_document(R"({"town": "NYC", "n": 1})"));
        const ConsistencyReport structural =
            evaluate_consistency(outputs, Mode::Structural, cfg, ctx);
        const ConsistencyReport semantic = evaluate_consistency(outputs, Mode::Semantic, cfg, ctx);
        CHECK(structural.mean_consistency < semantic.mean_consistency);
        CHECK(semantic.mean_consistency == 1.0);
    }
}

TEST_CASE("report JSON shape") {
    const ConsistencyReport r = consistency_score(set_of({0.5, 0.7, 0.9}));
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.to_json());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"mean_consistency", "sigma", "sigma_max", "sigma_hat",
                                           "consistency_score", "alpha", "mode", "n_outputs",
                                           "summary"});
    CHECK(j["alpha"] == 20.0);
    CHECK(j["summary"].contains("median"));
}
