#include "upb/qubit.hpp"

namespace upb {

CMatrix ProjQubit::vec() const {
    CMatrix v(2, 1);
    if (inf_) {
        v.at(1, 0) = GaussRat(1);
    } else {
        v.at(0, 0) = GaussRat(1);
        v.at(1, 0) = c_;
    }
    return v;
}

ProjQubit ProjQubit::orthogonal() const {
    // <(1,c), (1,d)> = 1 + conj(c) d = 0  <=>  d = -1/conj(c).
    if (inf_) return finite(GaussRat());
    if (c_.is_zero()) return infinity();
    return finite(-(GaussRat(1) / c_.conj()));
}

bool ProjQubit::operator<(const ProjQubit& o) const {
    if (inf_ != o.inf_) return !inf_;  // finite states sort first
    if (inf_) return false;
    if (c_.re != o.c_.re) return c_.re < o.c_.re;
    return c_.im < o.c_.im;
}

std::string ProjQubit::str() const {
    if (inf_) return "inf";
    return c_.str();
}

GaussRat inner2(const ProjQubit& a, const ProjQubit& b) {
    if (a.at_infinity() && b.at_infinity()) return GaussRat(1);
    if (a.at_infinity()) return b.coord();
    if (b.at_infinity()) return a.coord().conj();
    return GaussRat(1) + a.coord().conj() * b.coord();
}

} // namespace upb
