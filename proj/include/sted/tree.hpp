#ifndef STED_TREE_HPP
#define STED_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sted {

enum class NodeType { Object, Array, String, Number, Boolean, Null };

const char* node_type_name(NodeType t);

/// One node of a parsed document. Containers (Object/Array) carry children,
/// primitives carry a value; `label` is set iff the parent is an Object.
/// Numbers keep their source text alongside the normalized numeric value so
/// that 123 and 123.0 compare equal while serialization stays faithful.
struct TreeNode {
    NodeType type = NodeType::Null;
    std::optional<std::string> label;
    std::vector<TreeNode> children;

    std::string string_value;
    std::string number_text;
    long double number_value = 0.0L;
    bool bool_value = false;

    std::string path;

    bool is_container() const noexcept { return type == NodeType::Object || type == NodeType::Array; }
    bool is_leaf() const noexcept { return !is_container(); }

    static TreeNode make_object();
    static TreeNode make_array();
    static TreeNode make_string(std::string value);
    static TreeNode make_number(std::string text);
    static TreeNode make_integer(std::int64_t value);
    static TreeNode make_boolean(bool value);
    static TreeNode make_null();
};

struct DocumentTree {
    TreeNode root;
    std::size_t node_count = 0;
    std::size_t max_depth = 0;
    std::size_t max_branching = 0;
    std::vector<std::string> warnings;

    /// Recompute paths, node_count, max_depth and max_branching after the
    /// root has been constructed or mutated.
    void finalize();
};

struct ParseOptions {
    std::size_t max_depth = 512;
};

/// Parse UTF-8 JSON text into a DocumentTree. Source key order is preserved;
/// duplicate keys keep the first position with the last value and record a
/// warning. Throws ParseError (with byte offset) or DepthExceeded.
DocumentTree parse_document(const std::string& text, const ParseOptions& options = {});

DocumentTree parse_file(const std::string& file_path, const ParseOptions& options = {});

/// Serialize back to JSON text. `indent` = 0 emits the compact form; pretty
/// output ends with a newline so files are diff-friendly.
std::string serialize(const TreeNode& node, int indent = 0);
std::string serialize(const DocumentTree& tree, int indent = 0);

struct TreeStats {
    std::size_t node_count = 0;
    std::size_t max_depth = 0;
    std::size_t max_branching = 0;
    std::size_t field_count = 0;
    std::map<NodeType, std::size_t> type_histogram;
};

/// Stats recomputed by direct traversal (field_count counts object members).
TreeStats tree_stats(const DocumentTree& tree);

/// Numeric equality on the normalized value (so 123 == 123.0).
bool numbers_equal(const TreeNode& a, const TreeNode& b);

/// Same types, labels, normalized values and child order, recursively.
bool structurally_equal(const TreeNode& a, const TreeNode& b);
bool structurally_equal(const DocumentTree& a, const DocumentTree& b);

} // namespace sted

#endif // STED_TREE_HPP
