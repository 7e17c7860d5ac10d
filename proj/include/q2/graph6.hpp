#pragma once

#include <string>
#include <string_view>

#include "q2/graph.hpp"

namespace q2 {

// graph6: big-endian 6-bit groups biased by 63, upper triangle in column
// order (0,1),(0,2),(1,2),(0,3),... Optional ">>graph6<<" header on decode.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

}  // namespace q2
