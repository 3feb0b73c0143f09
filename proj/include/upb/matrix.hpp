#ifndef UPB_MATRIX_HPP
#define UPB_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "upb/rational.hpp"

namespace upb {

// Dense complex-rational matrix, row-major.  Sizes in this library are tiny
// (at most 64x64 for stacked solution spans; density matrices are 16x16), so
// the priority is exactness and clarity, not BLAS-style performance.  The
// genuinely hot kernels (rank, characteristic polynomial) clear denominators
// and run fraction-free over Gaussian integers internally.
class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    CMatrix(std::initializer_list<std::initializer_list<GaussRat>> init);

    static CMatrix identity(int n);
    static CMatrix column(const std::vector<GaussRat>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussRat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const GaussRat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    GaussRat& operator()(int r, int c) { return at(r, c); }
    const GaussRat& operator()(int r, int c) const { return at(r, c); }

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator*(const GaussRat& s) const;

    CMatrix transpose() const;
    CMatrix adjoint() const;  // conjugate transpose
    GaussRat trace() const;

    bool operator==(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const CMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_hermitian() const;

    // Canonical string form; used as a deterministic map key.
    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<GaussRat> a_;
};

// <u, v> = sum_i conj(u_i) v_i for column vectors.
GaussRat inner(const CMatrix& u, const CMatrix& v);

// Kronecker product, row-major convention:
// (A (x) B)[i*rB + k][j*cB + l] = A[i][j] * B[k][l].
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Exact rank via fraction-free (Bareiss) elimination over Gaussian integers.
int rank(const CMatrix& m);

// Exact right-nullspace basis (column vectors), size cols - rank.
std::vector<CMatrix> nullspace(const CMatrix& m);

// Characteristic polynomial of a Hermitian matrix, returned as coefficients
// e_0..e_n with det(lambda*I - H) = sum_k (-1)^k e_k lambda^(n-k).  The e_k
// are the elementary symmetric functions of the (real) eigenvalues; they are
// computed exactly by the Faddeev-LeVerrier recurrence after scaling H to a
// Gaussian-integer matrix (all interior divisions are then exact).
// Throws NonHermitianInput if H != H^dagger.
std::vector<Rat> char_poly(const CMatrix& h);

// A Hermitian matrix is positive semidefinite iff every e_k >= 0: the
// eigenvalues are real, and a real polynomial with sign-alternating
// coefficients (in the det(lambda*I - H) form) has no negative roots.
bool is_psd(const CMatrix& h);

// Scale a column vector so its first nonzero entry is 1 (projective
// canonical form).  Zero vectors are returned unchanged.
CMatrix monic(const CMatrix& v);

} // namespace upb

#endif
