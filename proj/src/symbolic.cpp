#include "x1lag/symbolic.hpp"

#include <sstream>

namespace x1lag {

std::string poly_str(const RationalPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p[k];
        if (c == 0) continue;
        if (!first)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        const Rational mag = abs(c);
        if (k == 0) {
            out << mag.get_str();
        } else {
            if (!(mag == 1)) out << mag.get_str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

std::string SymbolicMoment::str() const {
    return "(" + poly_str(a_) + ")*G + (" + poly_str(b_) + ")*T";
}

} // namespace x1lag
