#include "mwc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mwc {

namespace {

// Splits a line into whitespace-separated tokens, tolerating trailing \r.
std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool parse_int(std::string_view tok, long long& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

}  // namespace

VertexWeightedGraph VertexWeightedGraph::build(int n,
                                               const std::vector<std::pair<Vertex, Vertex>>& edges,
                                               std::vector<Weight> weights,
                                               std::vector<bool> explicit_weight) {
    assert(static_cast<int>(weights.size()) == n);
    VertexWeightedGraph g;
    g.n_ = n;
    g.weights_ = std::move(weights);
    g.explicit_weight_ = explicit_weight.empty() ? std::vector<bool>(n, false) : std::move(explicit_weight);

    // Deduplicate and drop self-loops.
    std::vector<std::pair<Vertex, Vertex>> uniq;
    uniq.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        uniq.emplace_back(u, v);
    }
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    g.m_ = static_cast<long long>(uniq.size());

    std::vector<int> deg(n, 0);
    for (auto [u, v] : uniq) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : uniq) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);

    // Dense instances get a bit-matrix, everything else a hash set.
    g.use_matrix_ = n > 0 && n <= 20000 && g.density() > 0.01;
    if (g.use_matrix_) {
        g.row_words_ = (static_cast<std::size_t>(n) + 63) / 64;
        g.matrix_.assign(static_cast<std::size_t>(n) * g.row_words_, 0);
        for (auto [u, v] : uniq) {
            g.matrix_[static_cast<std::size_t>(u) * g.row_words_ + (static_cast<std::size_t>(v) >> 6)] |=
                std::uint64_t{1} << (v & 63);
            g.matrix_[static_cast<std::size_t>(v) * g.row_words_ + (static_cast<std::size_t>(u) >> 6)] |=
                std::uint64_t{1} << (u & 63);
        }
    } else {
        g.edge_set_.reserve(uniq.size() * 2);
        for (auto [u, v] : uniq) g.edge_set_.insert(g.edge_key(u, v));
    }
    return g;
}

bool VertexWeightedGraph::operator==(const VertexWeightedGraph& other) const {
    return n_ == other.n_ && m_ == other.m_ && weights_ == other.weights_ &&
           offsets_ == other.offsets_ && adj_ == other.adj_;
}

VertexWeightedGraph parse_dimacs(std::string_view text) {
    long long n = -1, m_declared = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Weight> weights;
    std::vector<bool> explicit_weight;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;

        if (toks[0] == "p") {
            if (n >= 0) throw ParseError("duplicate header, line " + std::to_string(line_no), line_no);
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                throw ParseError("malformed header, line " + std::to_string(line_no), line_no);
            long long nn, mm;
            if (!parse_int(toks[2], nn) || !parse_int(toks[3], mm) || nn < 0 || mm < 0)
                throw ParseError("malformed header, line " + std::to_string(line_no), line_no);
            n = nn;
            m_declared = mm;
            (void)m_declared;  // recomputed from the deduplicated edge set
            weights.assign(n, 0);
            explicit_weight.assign(n, false);
        } else if (toks[0] == "e") {
            if (n < 0) throw ParseError("edge line before header, line " + std::to_string(line_no), line_no);
            long long u, v;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw ParseError("malformed edge line, line " + std::to_string(line_no), line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex id out of range, line " + std::to_string(line_no), line_no);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else if (toks[0] == "v") {
            if (n < 0) throw ParseError("weight line before header, line " + std::to_string(line_no), line_no);
            long long u, w;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], w))
                throw ParseError("malformed weight line, line " + std::to_string(line_no), line_no);
            if (u < 1 || u > n)
                throw ParseError("vertex id out of range, line " + std::to_string(line_no), line_no);
            if (w < 1) throw ParseError("non-positive weight, line " + std::to_string(line_no), line_no);
            weights[u - 1] = w;
            explicit_weight[u - 1] = true;
        } else {
            throw ParseError("unrecognized line, line " + std::to_string(line_no), line_no);
        }
    }
    if (n < 0) throw ParseError("missing header", 0);

    auto g = VertexWeightedGraph::build(static_cast<int>(n), edges, std::move(weights), std::move(explicit_weight));
    return apply_default_weights(std::move(g));
}

VertexWeightedGraph parse_dimacs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_dimacs(ss.str());
}

VertexWeightedGraph apply_default_weights(VertexWeightedGraph g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!g.has_explicit_weight(v)) g.weights_[v] = default_weight(v);
    return g;
}

VertexWeightedGraph with_default_weights(const VertexWeightedGraph& g) {
    VertexWeightedGraph out = g;
    for (Vertex v = 0; v < out.vertex_count(); ++v) {
        out.weights_[v] = default_weight(v);
        out.explicit_weight_[v] = false;
    }
    return out;
}

std::string serialize_dimacs(const VertexWeightedGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.weight(v) != default_weight(v)) out << "v " << v + 1 << ' ' << g.weight(v) << '\n';
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace mwc
