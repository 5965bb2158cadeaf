#include "pdzf/error.hpp"

namespace pdzf {

const char* to_string(ParseErrorKind kind) noexcept {
    switch (kind) {
        case ParseErrorKind::MalformedHeader: return "malformed header";
        case ParseErrorKind::MalformedEdge: return "malformed edge";
        case ParseErrorKind::VertexOutOfRange: return "vertex id out of range";
        case ParseErrorKind::SelfLoop: return "self-loop";
        case ParseErrorKind::DuplicateEdge: return "duplicate edge";
        case ParseErrorKind::EdgeCountMismatch: return "edge count mismatch";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : InputError(std::string(to_string(kind)) + " at line " + std::to_string(line) +
                 (detail.empty() ? "" : ": " + detail)),
      kind_(kind), line_(line) {}

}  // namespace pdzf
