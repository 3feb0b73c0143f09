#include "upb/matrix.hpp"

#include <sstream>
#include <utility>

namespace upb {

// ---------------------------------------------------------------------------
// CMatrix basics
// ---------------------------------------------------------------------------

CMatrix::CMatrix(std::initializer_list<std::initializer_list<GaussRat>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& row : init) {
        if (int(row.size()) != cols_) throw WrongShape("ragged initializer");
        for (const auto& z : row) a_.push_back(z);
    }
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
    return m;
}

CMatrix CMatrix::column(const std::vector<GaussRat>& entries) {
    CMatrix m(int(entries.size()), 1);
    for (int i = 0; i < m.rows_; ++i) m.at(i, 0) = entries[size_t(i)];
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw WrongShape("add: shape mismatch");
    CMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw WrongShape("sub: shape mismatch");
    CMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw WrongShape("mul: inner dimension mismatch");
    CMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GaussRat& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

CMatrix CMatrix::operator*(const GaussRat& s) const {
    CMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

CMatrix CMatrix::transpose() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

GaussRat CMatrix::trace() const {
    if (rows_ != cols_) throw WrongShape("trace: not square");
    GaussRat t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool CMatrix::is_zero() const {
    for (const auto& z : a_)
        if (!z.is_zero()) return false;
    return true;
}

bool CMatrix::is_hermitian() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

std::string CMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) out << ";";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ",";
            out << at(i, j).str();
        }
    }
    out << "]";
    return out.str();
}

GaussRat inner(const CMatrix& u, const CMatrix& v) {
    if (u.cols() != 1 || v.cols() != 1 || u.rows() != v.rows())
        throw WrongShape("inner: need equal-length column vectors");
    GaussRat s;
    for (int i = 0; i < u.rows(); ++i) s += u.at(i, 0).conj() * v.at(i, 0);
    return s;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const GaussRat& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return r;
}

// ---------------------------------------------------------------------------
// Fraction-free kernels
// ---------------------------------------------------------------------------

namespace {

// Clear denominators: returns s > 0 and an integer matrix equal to s * m.
mpz_class scale_to_int(const CMatrix& m, std::vector<GaussInt>& out) {
    mpz_class s(1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const GaussRat& z = m.at(i, j);
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), s.get_mpz_t(), z.re.get_den().get_mpz_t());
            mpz_lcm(s.get_mpz_t(), l.get_mpz_t(), z.im.get_den().get_mpz_t());
        }
    out.assign(size_t(m.rows()) * size_t(m.cols()), GaussInt());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const GaussRat& z = m.at(i, j);
            mpz_class re = z.re.get_num() * (s / z.re.get_den());
            mpz_class im = z.im.get_num() * (s / z.im.get_den());
            out[size_t(i) * m.cols() + j] = GaussInt(re, im);
        }
    return s;
}

} // namespace

int rank(const CMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<GaussInt> a;
    scale_to_int(m, a);
    const int rows = m.rows(), cols = m.cols();
    auto at = [&](int i, int j) -> GaussInt& { return a[size_t(i) * cols + j]; };

    // Bareiss fraction-free elimination: every interior division is exact,
    // keeping entry growth polynomial instead of exponential.
    GaussInt prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                at(i, j) = divexact(at(r, c) * at(i, j) - at(i, c) * at(r, j), prev);
            at(i, c) = GaussInt();
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

std::vector<CMatrix> nullspace(const CMatrix& m) {
    const int cols = m.cols();
    if (cols == 0) return {};
    // Rational RREF; matrices here are small (party dims <= 16).
    std::vector<std::vector<GaussRat>> a(size_t(m.rows()), std::vector<GaussRat>(size_t(cols)));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) a[size_t(i)][size_t(j)] = m.at(i, j);

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < int(a.size()); ++c) {
        int piv = -1;
        for (int i = r; i < int(a.size()); ++i)
            if (!a[size_t(i)][size_t(c)].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[size_t(piv)], a[size_t(r)]);
        GaussRat inv = GaussRat(1) / a[size_t(r)][size_t(c)];
        for (int j = c; j < cols; ++j) a[size_t(r)][size_t(j)] *= inv;
        for (int i = 0; i < int(a.size()); ++i) {
            if (i == r) continue;
            GaussRat f = a[size_t(i)][size_t(c)];
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j)
                a[size_t(i)][size_t(j)] -= f * a[size_t(r)][size_t(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(size_t(cols), false);
    for (int c : pivot_col) is_pivot[size_t(c)] = true;

    std::vector<CMatrix> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[size_t(f)]) continue;
        CMatrix v(cols, 1);
        v.at(f, 0) = GaussRat(1);
        for (int i = 0; i < int(pivot_col.size()); ++i)
            v.at(pivot_col[size_t(i)], 0) = -a[size_t(i)][size_t(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> char_poly(const CMatrix& h) {
    if (!h.is_hermitian()) throw NonHermitianInput("char_poly: input is not Hermitian");
    const int n = h.rows();
    std::vector<GaussInt> a;
    mpz_class s = scale_to_int(h, a);
    auto at = [&](int i, int j) -> const GaussInt& { return a[size_t(i) * n + j]; };

    // Faddeev-LeVerrier on the integer matrix A = s*h:
    //   M_0 = I, c_0 = 1;  M_k = A M_{k-1} + c_k I,  c_k = -tr(A M_{k-1}) / k.
    // Every c_k is an integer (it is a char-poly coefficient of an integer
    // matrix), so the division by k is exact.  Since A is Hermitian and the
    // c_k are real, each M_k is Hermitian and each trace real.
    std::vector<GaussInt> mk(size_t(n) * n);
    for (int i = 0; i < n; ++i) mk[size_t(i) * n + i] = GaussInt(1);
    std::vector<mpz_class> c(size_t(n) + 1);
    c[0] = 1;

    std::vector<GaussInt> am(size_t(n) * n);
    for (int k = 1; k <= n; ++k) {
        for (auto& z : am) z = GaussInt();
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const GaussInt& ail = at(i, l);
                if (ail.is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    am[size_t(i) * n + j] = am[size_t(i) * n + j] + ail * mk[size_t(l) * n + j];
            }
        GaussInt tr;
        for (int i = 0; i < n; ++i) tr = tr + am[size_t(i) * n + i];
        if (tr.im != 0) throw Error("char_poly: non-real trace (internal)");
        mpz_class q, rem;
        mpz_class kk(k);
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), tr.re.get_mpz_t(), kk.get_mpz_t());
        if (rem != 0) throw Error("char_poly: inexact trace division (internal)");
        c[size_t(k)] = -q;
        mk = am;
        for (int i = 0; i < n; ++i)
            mk[size_t(i) * n + i] = mk[size_t(i) * n + i] + GaussInt(c[size_t(k)], 0);
    }

    // det(lambda I - A) = sum_k c_k lambda^(n-k), so e_k(A) = (-1)^k c_k and
    // e_k(h) = e_k(A) / s^k.
    std::vector<Rat> e(size_t(n) + 1);
    mpz_class sk(1);
    for (int k = 0; k <= n; ++k) {
        mpz_class num = (k % 2 == 0) ? c[size_t(k)] : mpz_class(-c[size_t(k)]);
        Rat q(num, sk);
        q.canonicalize();
        e[size_t(k)] = q;
        sk *= s;
    }
    return e;
}

bool is_psd(const CMatrix& h) {
    for (const Rat& ek : char_poly(h))
        if (ek < 0) return false;
    return true;
}

CMatrix monic(const CMatrix& v) {
    for (int i = 0; i < v.rows(); ++i)
        for (int j = 0; j < v.cols(); ++j)
            if (!v.at(i, j).is_zero()) {
                GaussRat inv = GaussRat(1) / v.at(i, j);
                return v * inv;
            }
    return v;
}

} // namespace upb
