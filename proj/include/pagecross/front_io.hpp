#pragma once

#include <string>

#include "pagecross/front.hpp"

namespace pagecross {

// Text format, one event per token: O<p> opens a cusp at slot p, C<p>
// closes, X<p> crosses. Tokens separated by newlines or semicolons, '#'
// starts a comment. `orient <component> <+|->` assigns orientations
// (default +). `strands <n>` / `open` declare an open tangle edge.
FrontDiagram parse_front(const std::string& text);
std::string serialize_front(const FrontDiagram& d);

} // namespace pagecross
