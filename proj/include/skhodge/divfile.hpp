#pragma once

#include "skhodge/divisor.hpp"

namespace skhodge {

// Syntax/semantic error in a divisor file, with 1-based location.
class DivFileError : public std::runtime_error {
public:
    DivFileError(std::string origin, int line, int column, const std::string& msg);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_ = 0, column_ = 0;
};

struct DivisorFile {
    DivisorSpec spec;               // not yet normalized
    std::optional<BFunction> bfun;  // [bfunction] roots, if present
    std::vector<std::string> warnings;
};

// INI-style divisor description:
//   [divisor]      variables = x, y, z ; h = ... ; weights = 1, 2, 3 (optional)
//   [saito_basis]  delta1.. = (poly)*Dx + ... ; chi = ...   (Dx or D1 tokens)
//   [bfunction]    roots = -1:2, -2/3:1     (optional section)
//   [flags]        extended_scope = true    (optional section)
// '#' starts a comment. Throws DivFileError with line/column on bad input.
DivisorFile parse_divisor_text(const std::string& text, const std::string& origin = "<input>");
DivisorFile parse_divisor_file(const std::string& path);

}  // namespace skhodge
