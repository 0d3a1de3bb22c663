#ifndef X1LAG_IO_HPP
#define X1LAG_IO_HPP

#include <string>

namespace x1lag {

// %.{digits}g formatting; 17 significant digits round-trips doubles.
std::string format_double(double v, int digits = 17);

} // namespace x1lag

#endif
