#include "pdzf/vertex_set.hpp"

#include <sstream>

#include "pdzf/error.hpp"

namespace pdzf {

VertexSet VertexSet::of(std::size_t ambient, std::span<const Vertex> members) {
    VertexSet s(ambient);
    for (Vertex v : members) {
        if (v >= ambient) {
            throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                             std::to_string(ambient) + ")");
        }
        s.insert(v);
    }
    return s;
}

VertexSet VertexSet::of(std::size_t ambient, std::initializer_list<Vertex> members) {
    return of(ambient, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::full(std::size_t ambient) {
    VertexSet s(ambient);
    s.bits_.set();
    return s;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : *this) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace pdzf
