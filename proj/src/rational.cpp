#include "upb/rational.hpp"

#include <sstream>

namespace upb {

Rat rat_parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    Rat q;
    // mpq_class::set_str accepts "num" and "num/den" in base 10 but does not
    // validate trailing garbage strictly enough for config input, so check
    // the character set first.
    size_t slash = std::string::npos;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '/') {
            if (slash != std::string::npos || i == 0 || i + 1 == text.size())
                throw ParseError("bad rational literal: " + text);
            slash = i;
        } else if (ch == '-' || ch == '+') {
            if (i != 0 && i != slash + 1)
                throw ParseError("bad rational literal: " + text);
        } else if (ch < '0' || ch > '9') {
            throw ParseError("bad rational literal: " + text);
        }
    }
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    std::ostringstream out;
    if (re != 0) out << rat_str(re);
    if (im > 0 && re != 0) out << "+";
    if (im == -1) out << "-";
    else if (im != 1) out << rat_str(im);
    out << "i";
    return out.str();
}

GaussInt divexact(const GaussInt& a, const mpz_class& d) {
    if (d == 0) throw Error("divexact by zero");
    GaussInt q;
    mpz_class r;
    mpz_tdiv_qr(q.re.get_mpz_t(), r.get_mpz_t(), a.re.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw Error("divexact: remainder in real part");
    mpz_tdiv_qr(q.im.get_mpz_t(), r.get_mpz_t(), a.im.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw Error("divexact: remainder in imaginary part");
    return q;
}

GaussInt divexact(const GaussInt& a, const GaussInt& d) {
    // a / d = a * conj(d) / |d|^2, exact whenever d | a in Z[i].
    if (d.is_zero()) throw Error("divexact by zero");
    return divexact(a * d.conj(), d.norm2());
}

} // namespace upb
