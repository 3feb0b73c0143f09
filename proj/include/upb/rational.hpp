#ifndef UPB_RATIONAL_HPP
#define UPB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "upb/errors.hpp"

namespace upb {

// Exact rational scalar.  GMP keeps the value canonical (coprime, positive
// denominator) which is what every equality test in the library relies on.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "n" for integers, "n/d" otherwise (GMP's native format).
inline std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_parse(const std::string& text);

// Exact complex rational a + b*i.  This is the scalar type of every matrix
// and state coordinate in the library; no floating point anywhere.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, Rat(-im)); }
    // |z|^2 = re^2 + im^2, always a nonnegative rational.
    Rat norm2() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(Rat(-re), Rat(-im)); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat operator/(const GaussRat& o) const {
        Rat n = o.norm2();
        if (n == 0) throw Error("division by zero GaussRat");
        GaussRat num = *this * o.conj();
        return GaussRat(num.re / n, num.im / n);
    }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    // Human-readable "a+bi" form used in logs and canonical map keys.
    std::string str() const;
};

inline GaussRat conj(const GaussRat& z) { return z.conj(); }

// Exact complex integer a + b*i.  Internal workhorse for the fraction-free
// kernels (rank, characteristic polynomial, the assignment search): scaling
// projective data to Gaussian integers avoids per-operation gcd work.
struct GaussInt {
    mpz_class re;
    mpz_class im;

    GaussInt() : re(0), im(0) {}
    GaussInt(long r) : re(r), im(0) {}
    GaussInt(const mpz_class& r, const mpz_class& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussInt conj() const { return GaussInt(re, mpz_class(-im)); }
    mpz_class norm2() const { return re * re + im * im; }

    GaussInt operator-() const { return GaussInt(mpz_class(-re), mpz_class(-im)); }
    GaussInt operator+(const GaussInt& o) const { return GaussInt(re + o.re, im + o.im); }
    GaussInt operator-(const GaussInt& o) const { return GaussInt(re - o.re, im - o.im); }
    GaussInt operator*(const GaussInt& o) const {
        return GaussInt(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
};

// Exact division by an ordinary integer; throws if the quotient is not exact.
GaussInt divexact(const GaussInt& a, const mpz_class& d);
// Exact division by a Gaussian integer (used by Bareiss-style elimination,
// where divisibility is guaranteed by construction).
GaussInt divexact(const GaussInt& a, const GaussInt& d);

} // namespace upb

#endif
