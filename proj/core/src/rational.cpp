#include "msq/rational.hpp"
#include <stdexcept>

namespace msq {

std::string rat_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

} // namespace msq
