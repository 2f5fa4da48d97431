#pragma once

#include "ssu/system.hpp"

#include <string>

namespace ssu {

// Set expressions: FIN{..} | {..} | TAIL(f,k) | LTAIL(f,k) | UNION(..) |
// INTER(..) | DIFF(a,b). With relative=true every index must be written as
// i, i+d or i-d and the set is evaluated at i = 0.
VertexSet parse_set(const Universe& u, const std::string& text, bool relative = false);

// Canonical text of a set. Finite universes print {a,b} (or FIN{a,b} when
// doc_style is set); indexed universes print a set expression.
std::string format_set(const Universe& u, const VertexSet& a, bool doc_style = false);

// Paths are dot-joined edge names; "w" is omega.
Path parse_path(const Ultragraph& g, const std::string& text);
std::string format_path(const Ultragraph& g, const Path& p);

// "prefix/cycle" with dot-joined edges (prefix may be empty).
Lasso parse_lasso(const Ultragraph& g, const std::string& text);
std::string format_lasso(const Ultragraph& g, const Lasso& x);

GroupElem parse_group_elem(const Group& G, const std::string& text);

std::string trim(const std::string& s);

}  // namespace ssu
