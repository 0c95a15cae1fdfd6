#pragma once

#include <iostream>
#include <string>

namespace xdhh {

inline void log_warning(const std::string& msg) { std::cerr << "[xdhh] warning: " << msg << "\n"; }

}  // namespace xdhh
