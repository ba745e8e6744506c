#include "cfree/rational.hpp"

namespace cfree {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

std::string cscalar_to_string(const CScalar& z) {
    return rat_to_string(z.re) + (z.im >= 0 ? "+" : "") + rat_to_string(z.im) + "i";
}

}  // namespace cfree
