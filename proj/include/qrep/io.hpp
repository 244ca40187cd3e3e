#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "qrep/quiver.hpp"
#include "qrep/representation.hpp"

namespace qrep {

// Quiver files:
//
//   quiver <n>
//   arrow <label> <tail> <head>      (vertices numbered 1..n)
//
// Representation files:
//
//   rep over Q | rep over F<p>
//   dims d1 ... dn
//   map <label> <rows>x<cols>        (one per arrow)
//   <rows lines of cols entries>     (integers or a/b; omitted when rows or cols is 0)
//
// '#' starts a comment; blank lines are ignored. Both throw ParseError with
// the line and column of the offending token.

Quiver parse_quiver(std::string_view text);
Representation parse_representation(std::string_view text, std::shared_ptr<const Quiver> quiver);

std::string format_quiver(const Quiver& q);
std::string format_representation(const Representation& x);

std::string read_file(const std::string& path);

/// "e4" (1-based unit vector) or "1,1,1,8,12,2,7,7".
DimVector parse_dim_vector(std::string_view text, std::size_t vertex_count);
/// "8,7,5,4" or "s8 s7 s5 s4"; 1-based letters.
ReflectionWord parse_word(std::string_view text, std::size_t vertex_count);

}  // namespace qrep
