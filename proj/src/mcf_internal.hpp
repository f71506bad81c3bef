#pragma once
#include "flowdec/mcf.hpp"

namespace flowdec::detail {

// Structural validation shared by the solvers; throws std::invalid_argument.
void check_network(const FlowNetwork& net);

}  // namespace flowdec::detail
