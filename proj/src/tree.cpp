#include "sted/tree.hpp"

#include "sted/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace sted {

const char* node_type_name(NodeType t) {
    switch (t) {
    case NodeType::Object: return "object";
    case NodeType::Array: return "array";
    case NodeType::String: return "string";
    case NodeType::Number: return "number";
    case NodeType::Boolean: return "boolean";
    case NodeType::Null: return "null";
    }
    return "unknown";
}

TreeNode TreeNode::make_object() {
    TreeNode n;
    n.type = NodeType::Object;
    return n;
}

TreeNode TreeNode::make_array() {
    TreeNode n;
    n.type = NodeType::Array;
    return n;
}

TreeNode TreeNode::make_string(std::string value) {
    TreeNode n;
    n.type = NodeType::String;
    n.string_value = std::move(value);
    return n;
}

TreeNode TreeNode::make_number(std::string text) {
    TreeNode n;
    n.type = NodeType::Number;
    n.number_value = std::strtold(text.c_str(), nullptr);
    n.number_text = std::move(text);
    return n;
}

TreeNode TreeNode::make_integer(std::int64_t value) {
    return make_number(std::to_string(value));
}

TreeNode TreeNode::make_boolean(bool value) {
    TreeNode n;
    n.type = NodeType::Boolean;
    n.bool_value = value;
    return n;
}

TreeNode TreeNode::make_null() {
    TreeNode n;
    n.type = NodeType::Null;
    return n;
}

namespace {

void assign_paths(TreeNode& node, const std::string& path, std::size_t depth, std::size_t& count,
                  std::size_t& max_depth, std::size_t& max_branching) {
    node.path = path;
    ++count;
    max_depth = std::max(max_depth, depth);
    max_branching = std::max(max_branching, node.children.size());
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        TreeNode& child = node.children[i];
        std::string child_path;
        if (node.type == NodeType::Object) {
            child_path = path + "." + child.label.value_or("");
        } else {
            child_path = path + "[" + std::to_string(i) + "]";
        }
        assign_paths(child, child_path, depth + 1, count, max_depth, max_branching);
    }
}

// SAX handler building a TreeNode tree directly, so key order, duplicate-key
// policy, numeric source text and the depth limit all stay under our control.
class TreeBuilder : public nlohmann::json_sax<nlohmann::json> {
public:
    TreeBuilder(std::size_t max_depth, std::vector<std::string>& warnings)
        : max_depth_(max_depth), warnings_(warnings) {}

    bool null() override { return emit(TreeNode::make_null()); }
    bool boolean(bool val) override { return emit(TreeNode::make_boolean(val)); }
    bool number_integer(number_integer_t val) override {
        return emit(TreeNode::make_number(std::to_string(val)));
    }
    bool number_unsigned(number_unsigned_t val) override {
        return emit(TreeNode::make_number(std::to_string(val)));
    }
    bool number_float(number_float_t, const string_t& raw) override {
        return emit(TreeNode::make_number(raw));
    }
    bool string(string_t& val) override { return emit(TreeNode::make_string(val)); }
    bool binary(binary_t&) override { return true; } // unreachable for JSON text

    bool start_object(std::size_t) override { return push(TreeNode::make_object()); }
    bool end_object() override { return pop(); }
    bool start_array(std::size_t) override { return push(TreeNode::make_array()); }
    bool end_array() override { return pop(); }

    bool key(string_t& val) override {
        pending_key_ = val;
        have_key_ = true;
        return true;
    }

    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        error_offset_ = position > 0 ? position - 1 : 0;
        error_message_ = ex.what();
        return false;
    }

    bool depth_exceeded() const { return depth_exceeded_; }
    std::size_t error_offset() const { return error_offset_; }
    const std::string& error_message() const { return error_message_; }
    TreeNode take_root() { return std::move(root_); }

private:
    bool push(TreeNode node) {
        if (stack_.size() + 1 > max_depth_) {
            depth_exceeded_ = true;
            return false;
        }
        attach_label(node);
        stack_.push_back(std::move(node));
        return true;
    }

    bool pop() {
        TreeNode done = std::move(stack_.back());
        stack_.pop_back();
        return place(std::move(done));
    }

    bool emit(TreeNode node) {
        if (stack_.size() + 1 > max_depth_) {
            depth_exceeded_ = true;
            return false;
        }
        attach_label(node);
        return place(std::move(node));
    }

    void attach_label(TreeNode& node) {
        if (!stack_.empty() && stack_.back().type == NodeType::Object) {
            node.label = pending_key_;
            have_key_ = false;
        }
    }

    bool place(TreeNode node) {
        if (stack_.empty()) {
            root_ = std::move(node);
            return true;
        }
        TreeNode& parent = stack_.back();
        if (parent.type == NodeType::Object && node.label) {
            auto it = std::find_if(parent.children.begin(), parent.children.end(),
                                   [&](const TreeNode& c) { return c.label == node.label; });
            if (it != parent.children.end()) {
                warnings_.push_back("duplicate key \"" + *node.label + "\": last occurrence wins");
                *it = std::move(node);
                return true;
            }
        }
        parent.children.push_back(std::move(node));
        return true;
    }

    std::size_t max_depth_;
    std::vector<std::string>& warnings_;
    std::vector<TreeNode> stack_;
    TreeNode root_;
    std::string pending_key_;
    bool have_key_ = false;
    bool depth_exceeded_ = false;
    std::size_t error_offset_ = 0;
    std::string error_message_;
};

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    out += '"';
}

void write_node(std::string& out, const TreeNode& node, int indent, int depth) {
    const bool pretty = indent > 0;
    auto newline_pad = [&](int d) {
        if (!pretty) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent) * d, ' ');
    };
    switch (node.type) {
    case NodeType::Object:
    case NodeType::Array: {
        const char open = node.type == NodeType::Object ? '{' : '[';
        const char close = node.type == NodeType::Object ? '}' : ']';
        out += open;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i > 0) out += ',';
            newline_pad(depth + 1);
            if (node.type == NodeType::Object) {
                write_escaped(out, node.children[i].label.value_or(""));
                out += pretty ? ": " : ":";
            }
            write_node(out, node.children[i], indent, depth + 1);
        }
        if (!node.children.empty()) newline_pad(depth);
        out += close;
        break;
    }
    case NodeType::String:
        write_escaped(out, node.string_value);
        break;
    case NodeType::Number:
        out += node.number_text;
        break;
    case NodeType::Boolean:
        out += node.bool_value ? "true" : "false";
        break;
    case NodeType::Null:
        out += "null";
        break;
    }
}

} // namespace

void DocumentTree::finalize() {
    node_count = 0;
    max_depth = 0;
    max_branching = 0;
    assign_paths(root, "$", 1, node_count, max_depth, max_branching);
}

DocumentTree parse_document(const std::string& text, const ParseOptions& options) {
    DocumentTree tree;
    TreeBuilder builder(options.max_depth, tree.warnings);
    const bool ok = nlohmann::json::sax_parse(text, &builder);
    if (!ok) {
        if (builder.depth_exceeded()) {
            throw DepthExceeded("nesting exceeds limit of " + std::to_string(options.max_depth));
        }
        throw ParseError(builder.error_offset(), builder.error_message());
    }
    tree.root = builder.take_root();
    tree.finalize();
    return tree;
}

DocumentTree parse_file(const std::string& file_path, const ParseOptions& options) {
    std::ifstream in(file_path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open file: " + file_path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), options);
}

std::string serialize(const TreeNode& node, int indent) {
    std::string out;
    write_node(out, node, indent, 0);
    if (indent > 0) out += '\n';
    return out;
}

std::string serialize(const DocumentTree& tree, int indent) {
    return serialize(tree.root, indent);
}

namespace {

void collect_stats(const TreeNode& node, std::size_t depth, TreeStats& stats) {
    ++stats.node_count;
    stats.max_depth = std::max(stats.max_depth, depth);
    stats.max_branching = std::max(stats.max_branching, node.children.size());
    ++stats.type_histogram[node.type];
    if (node.type == NodeType::Object) {
        stats.field_count += node.children.size();
    }
    for (const TreeNode& child : node.children) {
        collect_stats(child, depth + 1, stats);
    }
}

} // namespace

TreeStats tree_stats(const DocumentTree& tree) {
    TreeStats stats;
    collect_stats(tree.root, 1, stats);
    return stats;
}

bool numbers_equal(const TreeNode& a, const TreeNode& b) {
    return a.number_value == b.number_value;
}

bool structurally_equal(const TreeNode& a, const TreeNode& b) {
    if (a.type != b.type || a.label != b.label) return false;
    switch (a.type) {
    case NodeType::String:
        if (a.string_value != b.string_value) return false;
        break;
    case NodeType::Number:
        if (!numbers_equal(a, b)) return false;
        break;
    case NodeType::Boolean:
        if (a.bool_value != b.bool_value) return false;
        break;
    default:
        break;
    }
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!structurally_equal(a.children[i], b.children[i])) return false;
    }
    return true;
}

bool structurally_equal(const DocumentTree& a, const DocumentTree& b) {
    return structurally_equal(a.root, b.root);
}

} // namespace sted
