#include <charconv>
#include <cstdio>
#include <istream>
#include <set>
#include <sstream>

#include "pdzf/error.hpp"
#include "pdzf/graph.hpp"

namespace pdzf {
namespace {

// Splits on blanks; returns false if a token is not a non-negative integer.
bool parse_numbers(std::string_view line, std::vector<std::size_t>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc() || ptr != line.data() + j) return false;
        out.push_back(value);
        i = j;
    }
    return true;
}

bool is_skippable(std::string_view line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

Graph from_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t header_line = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::vector<std::size_t> nums;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_skippable(line)) continue;
        bool ok = parse_numbers(line, nums);
        if (!have_header) {
            if (!ok || nums.size() != 2) {
                throw ParseError(ParseErrorKind::MalformedHeader, lineno, "expected \"n m\"");
            }
            n = nums[0];
            m = nums[1];
            header_line = lineno;
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (!ok || nums.size() != 2) {
            throw ParseError(ParseErrorKind::MalformedEdge, lineno, "expected \"u v\"");
        }
        if (edges.size() == m) {
            throw ParseError(ParseErrorKind::EdgeCountMismatch, lineno,
                             "more than the declared " + std::to_string(m) + " edges");
        }
        Vertex u = nums[0];
        Vertex v = nums[1];
        if (u >= n || v >= n) {
            throw ParseError(ParseErrorKind::VertexOutOfRange, lineno,
                             "vertex " + std::to_string(u >= n ? u : v) + " not in [0, " +
                                 std::to_string(n) + ")");
        }
        if (u == v) {
            throw ParseError(ParseErrorKind::SelfLoop, lineno, "vertex " + std::to_string(u));
        }
        Edge key = u < v ? Edge{u, v} : Edge{v, u};
        if (!seen.insert(key).second) {
            throw ParseError(ParseErrorKind::DuplicateEdge, lineno,
                             "{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
        }
        edges.emplace_back(u, v);
    }
    if (!have_header) {
        throw ParseError(ParseErrorKind::MalformedHeader, lineno + 1, "missing \"n m\" header");
    }
    if (edges.size() != m) {
        throw ParseError(ParseErrorKind::EdgeCountMismatch, header_line,
                         "declared " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
    }
    return Graph::from_edges(n, edges);
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return from_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

std::string digest(const Graph& g) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : to_edge_list(g)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace pdzf
