#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace ncheat {

/// Render a double with 15 significant digits ("%.15g"); non-finite values
/// become "nan"/"inf" sentinels.
inline std::string g15(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace ncheat
