#include "upb/state.hpp"

#include <algorithm>

namespace upb {

// ---------------------------------------------------------------------------
// Complement states
// ---------------------------------------------------------------------------

DensityMatrix build_complement_state(const ProductVectorSet& set) {
    if (auto bad = check_orthogonality(set))
        throw NotOrthogonal(set.name + ": rows " + std::to_string(bad->first + 1) + " and " +
                            std::to_string(bad->second + 1) + " are not orthogonal");
    const int d = 1 << set.n_qubits;
    const int m = set.size();
    if (m >= d) throw SetTooLarge(set.name + ": needs fewer rows than the space dimension");

    // rho = (I - sum_j |v_j><v_j| / <v_j,v_j>) / (d - m).  Normalising by the
    // rational squared norm keeps every entry a Gaussian rational.
    CMatrix acc = CMatrix::identity(d);
    for (int r = 0; r < m; ++r) {
        CMatrix v = set.full_vector(r);
        GaussRat n2 = inner(v, v);
        CMatrix proj = v * v.adjoint();
        acc = acc - proj * (GaussRat(1) / n2);
    }
    DensityMatrix state;
    state.rho = acc * GaussRat(make_rat(1, d - m));
    state.n_qubits = set.n_qubits;
    state.m_rows = m;
    return state;
}

CMatrix partial_transpose(const CMatrix& rho, const std::vector<int>& qubits, int n_qubits) {
    const int d = 1 << n_qubits;
    if (rho.rows() != d || rho.cols() != d)
        throw WrongShape("partial_transpose: matrix does not match qubit count");
    int mask = 0;
    for (int q : qubits) {
        if (q < 0 || q >= n_qubits) throw IndexOutOfRange("partial_transpose: bad qubit");
        mask |= 1 << (n_qubits - 1 - q);  // qubit 0 is the most significant bit
    }
    CMatrix out(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            // Swap the transposed-subsystem bits between row and column.
            int r2 = (r & ~mask) | (c & mask);
            int c2 = (c & ~mask) | (r & mask);
            out.at(r, c) = rho.at(r2, c2);
        }
    return out;
}

std::vector<std::vector<int>> bipartite_cuts(int n_qubits) {
    // One side per cut, smallest side listed; for even splits qubit 0 fixes
    // the side to avoid double-counting complements (the partial transpose
    // over a side and over its complement give mutually transposed
    // matrices, so PSD verdicts agree).
    std::vector<std::vector<int>> cuts;
    const int n = n_qubits;
    for (int size = 1; size <= n / 2; ++size) {
        std::vector<int> subset(static_cast<size_t>(size));
        // Enumerate subsets of {0..n-1} of this size in lexicographic order.
        for (int bits = 0; bits < (1 << n); ++bits) {
            if (__builtin_popcount(unsigned(bits)) != size) continue;
            if (2 * size == n && !(bits & 1)) continue;  // qubit 0 on the listed side
            subset.clear();
            for (int q = 0; q < n; ++q)
                if (bits & (1 << q)) subset.push_back(q);
            cuts.push_back(subset);
        }
    }
    return cuts;
}

bool is_ppt_all_cuts(const DensityMatrix& state) {
    for (const auto& cut : bipartite_cuts(state.n_qubits))
        if (!is_psd(partial_transpose(state.rho, cut, state.n_qubits))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Entanglement certification
// ---------------------------------------------------------------------------

namespace {

RangeCertificate range_certificate(const ProductVectorSet& set, const PartySplit& split,
                                   const SearchOptions& options) {
    RangeCertificate cert;
    cert.split = split;
    const int d = 1 << set.n_qubits;
    cert.threshold = d - set.size() - 1;
    auto sols = enumerate_orthogonal(group(set, split), options);
    cert.finite = sols.finite;
    cert.solution_count = sols.isolated_count;
    cert.span_rank = solution_span_rank(group(set, split), sols);
    cert.entangled = cert.span_rank <= cert.threshold;
    return cert;
}

} // namespace

StateCertificate certify(const ProductVectorSet& set, const SearchOptions& options) {
    StateCertificate cert;
    if (check_orthogonality(set)) {
        cert.orthogonal = false;
        cert.verdict = "not orthogonal";
        return cert;
    }
    cert.orthogonal = true;
    cert.upb_fourqubit = is_upb(set, PartySplit::fourqubit(), options);

    DensityMatrix state = build_complement_state(set);
    cert.rank = rank(state.rho);
    cert.ppt_all_cuts = is_ppt_all_cuts(state);

    // The complement state is claimed entangled as a 4-qubit, 2x2x4 and 4x4
    // state; the range criterion is evaluated per coarse-graining.  A span
    // rank above the threshold leaves the criterion silent, never implies
    // separability.
    for (const auto& split :
         {PartySplit::fourqubit(), PartySplit::a_b_cd(), PartySplit::ab_cd()})
        cert.ranges.push_back(range_certificate(set, split, options));

    bool all_entangled = true;
    for (const auto& r : cert.ranges) all_entangled &= r.entangled;
    cert.bound_entangled = cert.ppt_all_cuts && all_entangled;
    cert.verdict = cert.bound_entangled ? "bound entangled" : "criterion inconclusive";
    return cert;
}

bool count_equivalence_check(const ProductVectorSet& a, const ProductVectorSet& b,
                             const PartySplit& split_a, const PartySplit& split_b,
                             const SearchOptions& options) {
    auto sa = enumerate_orthogonal(group(a, split_a), options);
    auto sb = enumerate_orthogonal(group(b, split_b), options);
    if (sa.finite != sb.finite) return false;
    if (sa.finite) return sa.isolated_count == sb.isolated_count;
    return true;  // both infinite
}

DropOneCensus drop_one_census(const ProductVectorSet& set, const PartySplit& split,
                              const SearchOptions& options) {
    DropOneCensus census;
    census.split = split;
    for (int r = 1; r <= set.size(); ++r) {
        auto sols = enumerate_orthogonal(group(drop_row(set, r), split), options);
        census.finite.push_back(sols.finite);
        census.counts.push_back(sols.finite ? std::optional<int>(sols.isolated_count)
                                            : std::nullopt);
    }
    return census;
}

} // namespace upb
