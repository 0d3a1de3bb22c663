#include "x1lag/io.hpp"

#include <cstdio>

namespace x1lag {

std::string format_double(double v, int digits) {
    if (digits < 1) digits = 1;
    if (digits > 17) digits = 17;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

} // namespace x1lag
