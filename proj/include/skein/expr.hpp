#pragma once

#include "skein/sigma.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skein {

class ParseError : public std::runtime_error {
public:
    ParseError(size_t pos, const std::string& what)
        : std::runtime_error("at " + std::to_string(pos) + ": " + what), pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

// expr := ["-"] term (("+"|"-") term)*
// term := factor ("*" factor)*
// factor := atom ("^" ["-"] int)?
// atom := int | "A" | "l" | ident "(" int ("," int)? ")" | "(" expr ")"
// psi(m) needs ctx; a negative power is accepted only on +-A^k.
SkeinVector parse_expression(std::string_view text, std::optional<Nu1Context> ctx = std::nullopt);

// Canonical text that parses back to the same vector.
std::string format_expression(const SkeinVector& v);

}  // namespace skein
