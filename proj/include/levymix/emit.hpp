#pragma once

#include <cstdio>
#include <string>

namespace levymix::emit {

/// Doubles printed with 17 significant digits round-trip exactly.
inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace levymix::emit
