#include "sted/tree.hpp"

#include "sted/errors.hpp"
#include "sted/variation.hpp"

#include "doctest.h"

#include <set>
#include <string>

using namespace sted;

TEST_CASE("minimal object") {
    const DocumentTree t = parse_document(R"({"a": 1})");
    CHECK(t.root.type == NodeType::Object);
    REQUIRE(t.root.children.size() == 1);
    const TreeNode& child = t.root.children[0];
    CHECK(child.type == NodeType::Number);
    CHECK(child.label == "a");
    CHECK(t.root.path == "$");
    CHECK(child.path == "$.a");
    CHECK(t.node_count == 2);
    CHECK(t.max_depth == 2);
}

TEST_CASE("minimal array") {
    const DocumentTree t = parse_document("[1, 2]");
    CHECK(t.root.type == NodeType::Array);
    REQUIRE(t.root.children.size() == 2);
    CHECK(t.root.children[0].path == "$[0]");
    CHECK(t.root.children[1].path == "$[1]");
    CHECK_FALSE(t.root.children[0].label.has_value());
}

TEST_CASE("malformed input reports byte offset") {
    try {
        parse_document("{a:");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("trailing garbage rejected") {
    CHECK_THROWS_AS(parse_document("{} {}"), ParseError);
    CHECK_THROWS_AS(parse_document(""), ParseError);
}

TEST_CASE("depth limit") {
    std::string deep;
    for (int i = 0; i < 600; ++i) deep += "[";
    for (int i = 0; i < 600; ++i) deep += "]";
    CHECK_THROWS_AS(parse_document(deep), DepthExceeded);

    ParseOptions opts;
    opts.max_depth = 3;
    CHECK_THROWS_AS(parse_document("[[[[0]]]]", opts), DepthExceeded);
    CHECK_NOTHROW(parse_document("[[0]]", opts));
}

TEST_CASE("numbers keep source text and compare normalized") {
    const DocumentTree a = parse_document(R"({"x": 123})");
    const DocumentTree b = parse_document(R"({"x": 123.0})");
    CHECK(numbers_equal(a.root.children[0], b.root.children[0]));
    CHECK(a.root.children[0].number_text == "123");
    CHECK(b.root.children[0].number_text == "123.0");
    CHECK(serialize(b) == R"({"x":123.0})");

    const DocumentTree c = parse_document(R"([1.5e3, 1500])");
    CHECK(numbers_equal(c.root.children[0], c.root.children[1]));
    CHECK(serialize(c) == "[1.5e3,1500]");
}

TEST_CASE("duplicate keys: last occurrence wins with a warning") {
    const DocumentTree t = parse_document(R"({"k": 1, "k": 2})");
    REQUIRE(t.root.children.size() == 1);
    CHECK(t.root.children[0].number_text == "2");
    REQUIRE(t.warnings.size() == 1);
    CHECK(t.warnings[0].find("duplicate key") != std::string::npos);
}

TEST_CASE("key order preserved at parse time") {
    const DocumentTree t = parse_document(R"({"b": 1, "a": 2, "c": 3})");
    REQUIRE(t.root.children.size() == 3);
    CHECK(*t.root.children[0].label == "b");
    CHECK(*t.root.children[1].label == "a");
    CHECK(*t.root.children[2].label == "c");
}

TEST_CASE("tree_stats hand-counted examples") {
    SUBCASE("flat object") {
        const TreeStats s = tree_stats(parse_document(R"({"a": 1})"));
        CHECK(s.node_count == 2);
        CHECK(s.max_depth == 2);
        CHECK(s.field_count == 1);
        CHECK(s.type_histogram.at(NodeType::Object) == 1);
        CHECK(s.type_histogram.at(NodeType::Number) == 1);
    }
    SUBCASE("nested object") {
        const TreeStats s = tree_stats(parse_document(R"({"u": {"n": "x"}})"));
        CHECK(s.max_depth == 3);
        CHECK(s.field_count == 2);
    }
    SUBCASE("empty array") {
        const TreeStats s = tree_stats(parse_document("[]"));
        CHECK(s.node_count == 1);
        CHECK(s.max_branching == 0);
        CHECK(s.max_depth == 1);
    }
}

TEST_CASE("string escapes round-trip") {
    const std::string text = R"({"s": "line\nbreak \"quoted\" tab\t unicode é \\"})";
    const DocumentTree t = parse_document(text);
    const DocumentTree again = parse_document(serialize(t));
    CHECK(structurally_equal(t, again));
    const DocumentTree pretty_again = parse_document(serialize(t, 2));
    CHECK(structurally_equal(t, pretty_again));
}

TEST_CASE("round-trip and path uniqueness over generated corpus") {
    const auto specs = sample_base_specs(25, 20250810);
    for (const BaseDocSpec& spec : specs) {
        const DocumentTree doc = gen_base_document(spec);

        // round-trip: parse(serialize(t)) is structurally identical
        const DocumentTree reparsed = parse_document(serialize(doc, 2));
        CHECK(structurally_equal(doc, reparsed));

        // paths are unique
        std::set<std::string> paths;
        std::size_t count = 0;
        std::vector<const TreeNode*> stack{&doc.root};
        while (!stack.empty()) {
            const TreeNode* n = stack.back();
            stack.pop_back();
            ++count;
            CHECK(paths.insert(n->path).second);
            for (const TreeNode& c : n->children) stack.push_back(&c);
        }

        // stored stats match brute-force traversal
        const TreeStats s = tree_stats(doc);
        CHECK(s.node_count == doc.node_count);
        CHECK(s.node_count == count);
        CHECK(s.max_depth == doc.max_depth);
        CHECK(s.max_branching == doc.max_branching);
    }
}

TEST_CASE("labels appear exactly on object members") {
    const DocumentTree t = parse_document(R"({"arr": [ {"inner": 1}, 7 ]})");
    const TreeNode& arr = t.root.children[0];
    CHECK(arr.label == "arr");
    CHECK_FALSE(arr.children[0].label.has_value()); // array element object
    CHECK(arr.children[0].children[0].label == "inner");
    CHECK_FALSE(arr.children[1].label.has_value());
}
