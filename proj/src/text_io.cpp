#include "gmi/text_io.hpp"

#include "gmi/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace gmi {

namespace {

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& message) {
    YAML::Mark m = node.Mark();
    if (m.is_null()) throw ParseError(message, 0, 0);
    throw ParseError(message, static_cast<std::size_t>(m.line) + 1, static_cast<std::size_t>(m.column) + 1);
}

std::string scalar(const YAML::Node& node, const char* what) {
    if (!node.IsScalar()) fail_at(node, std::string(what) + " must be a scalar");
    std::string s = node.Scalar();
    if (s.empty()) fail_at(node, std::string(what) + " must not be empty");
    return s;
}

std::vector<MixedGraph::LabelPair> edge_list(const YAML::Node& root, const char* key, const std::set<std::string>& labels) {
    std::vector<MixedGraph::LabelPair> out;
    YAML::Node list = root[key];
    if (!list || list.IsNull()) return out;
    if (!list.IsSequence()) fail_at(list, std::string("'") + key + "' must be a list of vertex pairs");
    for (const auto& edge : list) {
        if (!edge.IsSequence() || edge.size() != 2) fail_at(edge, std::string("each '") + key + "' entry must be a pair [u, v]");
        std::string u = scalar(edge[0], "edge endpoint");
        std::string v = scalar(edge[1], "edge endpoint");
        if (!labels.count(u)) fail_at(edge[0], "unknown vertex '" + u + "'");
        if (!labels.count(v)) fail_at(edge[1], "unknown vertex '" + v + "'");
        if (u == v) fail_at(edge, "self-loop at vertex '" + u + "'");
        out.emplace_back(u, v);
    }
    return out;
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line) + 1, static_cast<std::size_t>(e.mark.column) + 1);
    }
    if (!root.IsMap()) fail_at(root, "graph document must be a mapping");
    static const std::set<std::string> known = {"vertices", "directed", "bidirected", "undirected", "levels"};
    for (const auto& kv : root) {
        std::string key = kv.first.Scalar();
        if (!known.count(key)) fail_at(kv.first, "unknown key '" + key + "'");
    }
    YAML::Node vertices = root["vertices"];
    if (!vertices || !vertices.IsSequence()) fail_at(vertices ? vertices : root, "'vertices' must be a list of labels");
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        std::string label = scalar(v, "vertex label");
        if (!seen.insert(label).second) fail_at(v, "duplicate vertex label '" + label + "'");
        labels.push_back(label);
    }
    if (labels.empty()) fail_at(vertices, "'vertices' must not be empty");
    if (labels.size() > kMaxVertices) fail_at(vertices, "at most " + std::to_string(kMaxVertices) + " vertices are supported");

    auto directed = edge_list(root, "directed", seen);
    auto bidirected = edge_list(root, "bidirected", seen);
    auto undirected = edge_list(root, "undirected", seen);
    GraphDocument doc{MixedGraph(labels, directed, bidirected, undirected), std::nullopt};

    if (YAML::Node lv = root["levels"]; lv && !lv.IsNull()) {
        if (!lv.IsSequence()) fail_at(lv, "'levels' must be a list of positive integers");
        if (lv.size() != labels.size()) fail_at(lv, "'levels' must have one entry per vertex");
        std::vector<unsigned> by_document;
        for (const auto& x : lv) {
            std::string s = scalar(x, "level");
            unsigned long value = 0;
            std::size_t used = 0;
            try {
                value = std::stoul(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != s.size() || value == 0 || value > 1000) fail_at(x, "level must be a positive integer, got '" + s + "'");
            by_document.push_back(static_cast<unsigned>(value));
        }
        std::vector<unsigned> canonical(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) canonical[*doc.graph.position(labels[i])] = by_document[i];
        doc.levels = std::move(canonical);
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphDocument load_graph_document(const std::string& path) {
    try {
        return parse_graph_document(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0, 0);
    }
}

namespace {

class LineScanner {
public:
    LineScanner(std::string_view line, std::size_t line_number) : s_(line), line_(line_number) {}

    void skip_space() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= s_.size();
    }
    void expect(std::string_view token) {
        skip_space();
        if (s_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
        pos_ += token.size();
    }
    VertexSet vertex_set(const MixedGraph& g) {
        expect("{");
        VertexSet out;
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == '}') {
            ++pos_;
            return out;
        }
        for (;;) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != '}' && s_[pos_] != ' ' && s_[pos_] != '\t') ++pos_;
            std::string_view label = s_.substr(start, pos_ - start);
            if (label.empty()) fail("expected a vertex label");
            auto v = g.position(label);
            if (!v) fail_at(start, "unknown vertex '" + std::string(label) + "'");
            if (out.contains(*v)) fail_at(start, "vertex '" + std::string(label) + "' repeated");
            out.insert(*v);
            skip_space();
            if (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            expect("}");
            return out;
        }
    }
    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
        throw ParseError(message, line_, pos + 1);
    }

private:
    std::string_view s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

CIStatement parse_statement(std::string_view line, const MixedGraph& g, std::size_t line_number) {
    LineScanner scan(line, line_number);
    VertexSet a = scan.vertex_set(g);
    scan.expect("_||_");
    VertexSet b = scan.vertex_set(g);
    scan.expect("|");
    VertexSet c = scan.vertex_set(g);
    if (!scan.at_end()) scan.fail("unexpected trailing text");
    try {
        return CIStatement(a, b, c);
    } catch (const InvalidArgument& e) {
        scan.fail_at(0, e.what());
    }
}

std::vector<CIStatement> parse_statements(std::string_view text, const MixedGraph& g) {
    std::vector<CIStatement> out;
    std::size_t line_number = 0;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_number;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;
        out.push_back(parse_statement(line, g, line_number));
    }
    return out;
}

std::vector<CIStatement> load_statements(const std::string& path, const MixedGraph& g) {
    try {
        return parse_statements(read_file(path), g);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0, 0);
    }
}

}  // namespace gmi
