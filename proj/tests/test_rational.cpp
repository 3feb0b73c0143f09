#include "doctest.h"

#include "upb/rational.hpp"

using namespace upb;

TEST_CASE("rationals are canonical: positive denominator, reduced, zero is 0/1") {
    Rat a = make_rat(6, -4);
    CHECK(a.get_den() > 0);
    CHECK(a == make_rat(-3, 2));
    CHECK(rat_str(a) == "-3/2");

    Rat z = make_rat(0, 7);
    CHECK(rat_str(z) == "0");
    CHECK(z.get_den() == 1);

    CHECK(rat_str(make_rat(10, 5)) == "2");
}

TEST_CASE("rat_parse inverts rat_str") {
    for (long num = -7; num <= 7; ++num)
        for (long den = 1; den <= 5; ++den) {
            Rat r = make_rat(num, den);
            CHECK(rat_parse(rat_str(r)) == r);
        }
    CHECK(rat_parse("-3/2") == make_rat(-3, 2));
    CHECK(rat_parse("0") == Rat(0));
}

TEST_CASE("Gaussian rationals: field operations") {
    GaussRat z(make_rat(3, 2), make_rat(-1, 3));
    GaussRat w(make_rat(-2, 5), make_rat(7, 4));

    CHECK((z + w) - w == z);
    CHECK((z * w) == (w * z));
    CHECK(z * (w + GaussRat(1)) == z * w + z);

    GaussRat q = z / w;
    CHECK(q * w == z);

    CHECK(GaussRat(0).is_zero());
    CHECK(!z.is_zero());
    CHECK(GaussRat(make_rat(5, 3)).is_real());
    CHECK(!z.is_real());
}

TEST_CASE("conjugation is an involution and norm2 = z * conj(z)") {
    GaussRat z(make_rat(3, 2), make_rat(-1, 3));
    CHECK(z.conj().conj() == z);

    GaussRat n = z * z.conj();
    CHECK(n.is_real());
    CHECK(n.re == z.norm2());
    CHECK(z.norm2() >= 0);
    CHECK(GaussRat(0).norm2() == 0);
}

TEST_CASE("Gaussian integers: exact division") {
    GaussInt a(3, -2), b(1, 4);
    GaussInt p = a * b;
    CHECK(divexact(p, a) == b);
    CHECK(divexact(p, b) == a);
}
