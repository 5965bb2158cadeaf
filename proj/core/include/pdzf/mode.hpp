#pragma once

#include <optional>
#include <string_view>

namespace pdzf {

/// Which covering property a vertex set must have.
enum class Mode { PowerDomination, ZeroForcing, Domination };

/// "pd", "zf", "dom".
const char* to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;

}  // namespace pdzf
