#include "firebreak/graph.hpp"

namespace firebreak::detail {

void graph_error(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace firebreak::detail
