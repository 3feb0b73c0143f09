#include "doctest.h"

#include <vector>

#include "upb/qubit.hpp"

using namespace upb;

namespace {

std::vector<ProjQubit> sample_states() {
    return {
        ProjQubit::zero(),
        ProjQubit::one(),
        ProjQubit::finite(1),
        ProjQubit::finite(-1),
        ProjQubit::finite(0, 1),   // i
        ProjQubit::finite(0, -1),  // -i
        ProjQubit::finite(GaussRat(make_rat(3, 2), make_rat(-5, 7))),
        ProjQubit::finite(GaussRat(make_rat(-2, 3), make_rat(1, 4))),
    };
}

} // namespace

TEST_CASE("basis aliases: zero is the finite origin, one is the point at infinity") {
    CHECK(ProjQubit::zero() == ProjQubit::finite(0));
    CHECK(ProjQubit::one() == ProjQubit::infinity());
    CHECK(ProjQubit::zero() != ProjQubit::one());
    CHECK(ProjQubit::zero().vec().at(0, 0) == GaussRat(1));
    CHECK(ProjQubit::zero().vec().at(1, 0) == GaussRat(0));
    CHECK(ProjQubit::one().vec().at(0, 0) == GaussRat(0));
    CHECK(ProjQubit::one().vec().at(1, 0) == GaussRat(1));
}

TEST_CASE("orthogonal is an involution with inner2 exactly zero") {
    for (const auto& p : sample_states()) {
        CHECK(p.orthogonal().orthogonal() == p);
        CHECK(p.orthogonal() != p);
        CHECK(inner2(p, p.orthogonal()).is_zero());
        CHECK(inner2(p.orthogonal(), p).is_zero());
        CHECK(!inner2(p, p).is_zero());
    }
    CHECK(ProjQubit::zero().orthogonal() == ProjQubit::one());
    CHECK(ProjQubit::one().orthogonal() == ProjQubit::zero());
    // Finite(c) with c != 0 maps to Finite(-1/conj(c))
    ProjQubit two = ProjQubit::finite(2);
    CHECK(two.orthogonal() == ProjQubit::finite(GaussRat(make_rat(-1, 2), Rat(0))));
}

TEST_CASE("inner2 matches the closed form 1 + conj(c) d") {
    GaussRat c(make_rat(3, 2), make_rat(1, 5)), d(make_rat(-1, 3), make_rat(2, 7));
    CHECK(inner2(ProjQubit::finite(c), ProjQubit::finite(d)) == GaussRat(1) + c.conj() * d);
    // against infinity: <(1,c), (0,1)> = conj(c)
    CHECK(inner2(ProjQubit::finite(c), ProjQubit::one()) == c.conj());
    CHECK(inner2(ProjQubit::one(), ProjQubit::finite(c)) == c);
    CHECK(inner2(ProjQubit::one(), ProjQubit::one()) == GaussRat(1));
}

TEST_CASE("projective equality ignores nothing but the ray") {
    CHECK(ProjQubit::finite(GaussRat(make_rat(1, 2), Rat(0))) ==
          ProjQubit::finite(GaussRat(make_rat(2, 4), Rat(0))));
    CHECK(ProjQubit::finite(1) != ProjQubit::finite(-1));
    CHECK(ProjQubit::finite(0, 1) != ProjQubit::finite(0, -1));
}

TEST_CASE("vec agrees with inner2 through the matrix inner product") {
    for (const auto& a : sample_states())
        for (const auto& b : sample_states()) CHECK(inner(a.vec(), b.vec()) == inner2(a, b));
}

TEST_CASE("total order is consistent: irreflexive, trichotomous on samples") {
    auto states = sample_states();
    for (const auto& a : states)
        for (const auto& b : states) {
            if (a == b) {
                CHECK(!(a < b));
                CHECK(!(b < a));
            } else {
                CHECK((a < b) != (b < a));
            }
        }
}

TEST_CASE("str round-trips distinct states to distinct text") {
    auto states = sample_states();
    for (size_t i = 0; i < states.size(); ++i)
        for (size_t j = i + 1; j < states.size(); ++j)
            CHECK(states[i].str() != states[j].str());
}
