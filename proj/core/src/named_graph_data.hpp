#pragma once

#include <string_view>

namespace girthlift::detail {

// Generated at configure time from core/data/*.txt. Empty if unknown.
std::string_view embedded_graph_file(std::string_view stem);

}  // namespace girthlift::detail
