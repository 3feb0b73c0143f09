#ifndef UPB_QUBIT_HPP
#define UPB_QUBIT_HPP

#include <string>

#include "upb/matrix.hpp"
#include "upb/rational.hpp"

namespace upb {

// A single-qubit pure state as a point of the projective line over the
// Gaussian rationals.  Finite(c) is the ray through (1, c); Infinity is the
// ray through (0, 1), i.e. the second basis state.  This parametrisation
// makes projective equality a plain field comparison and gives a closed-form
// orthogonal partner.
class ProjQubit {
  public:
    ProjQubit() : inf_(false), c_() {}

    static ProjQubit finite(const GaussRat& c) { return ProjQubit(false, c); }
    static ProjQubit finite(long re, long im = 0) {
        return ProjQubit(false, GaussRat(make_rat(re), make_rat(im)));
    }
    static ProjQubit infinity() { return ProjQubit(true, GaussRat()); }

    static ProjQubit zero() { return finite(GaussRat()); }  // basis state (1,0)
    static ProjQubit one() { return infinity(); }           // basis state (0,1)

    bool at_infinity() const { return inf_; }
    const GaussRat& coord() const { return c_; }

    // Unnormalised representative (1, c) or (0, 1) as a 2x1 column.
    CMatrix vec() const;

    // The unique orthogonal ray: Finite(c) -> Finite(-1/conj(c)) for c != 0,
    // Finite(0) <-> Infinity.  An exact involution.
    ProjQubit orthogonal() const;

    bool operator==(const ProjQubit& o) const {
        return inf_ == o.inf_ && (inf_ || c_ == o.c_);
    }
    bool operator!=(const ProjQubit& o) const { return !(*this == o); }

    // Total order for deterministic containers.
    bool operator<(const ProjQubit& o) const;

    std::string str() const;

  private:
    ProjQubit(bool inf, const GaussRat& c) : inf_(inf), c_(c) {}
    bool inf_;
    GaussRat c_;
};

// Inner product of the unnormalised representatives, conjugating the first
// argument: inner2(Finite(c), Finite(d)) = 1 + conj(c) d.  Zero exactly when
// the states are orthogonal rays.
GaussRat inner2(const ProjQubit& a, const ProjQubit& b);

} // namespace upb

#endif
