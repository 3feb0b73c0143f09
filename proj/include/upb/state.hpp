#ifndef UPB_STATE_HPP
#define UPB_STATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "upb/matrix.hpp"
#include "upb/split.hpp"
#include "upb/unextend.hpp"
#include "upb/uom.hpp"

namespace upb {

// ---------------------------------------------------------------------------
// Complement states
// ---------------------------------------------------------------------------

// rho = (I - sum_i P_i) / (d - m), exact.  The projector onto each row uses
// the normalised form v v^dag / <v, v>, so rho is a genuine density matrix
// whenever the rows are orthogonal.
struct DensityMatrix {
    CMatrix rho;     // d x d Hermitian, trace 1
    int n_qubits = 0;
    int m_rows = 0;  // number of projectors removed
};

DensityMatrix build_complement_state(const ProductVectorSet& set);

// Partial transpose on a subset of qubits.  Qubit 0 is the most significant
// bit of the row index: bit q of index r is (r >> (n-1-q)) & 1.
CMatrix partial_transpose(const CMatrix& rho, const std::vector<int>& qubits, int n_qubits);

// The seven bipartite cuts of four qubits, in a fixed order:
// A|BCD, B|ACD, C|ABD, D|ABC, AB|CD, AC|BD, AD|BC (generalised to n qubits
// as all nonempty subsets containing qubit 0's complement convention).
std::vector<std::vector<int>> bipartite_cuts(int n_qubits);

// True iff rho^{T_S} is positive semidefinite for every bipartite cut S.
// Exact: characteristic-polynomial sign test, no eigenvalue numerics.
bool is_ppt_all_cuts(const DensityMatrix& state);

// ---------------------------------------------------------------------------
// Entanglement certification via range product vectors
// ---------------------------------------------------------------------------

// Range criterion bookkeeping for one coarse-graining: the span of all
// product vectors orthogonal to the full set, with the rank threshold
// d - m - 1 below which no product basis of the complement can exist.
struct RangeCertificate {
    PartySplit split;
    bool finite = true;
    int solution_count = 0;  // isolated solutions (meaningful when finite)
    int span_rank = 0;
    int threshold = 0;       // d - m - 1
    bool entangled = false;  // span_rank <= threshold
};

struct StateCertificate {
    int rank = 0;
    bool orthogonal = false;
    bool upb_fourqubit = false;
    bool ppt_all_cuts = false;
    std::vector<RangeCertificate> ranges;  // A:B:C:D, A:B:CD, AB:CD
    bool bound_entangled = false;          // ppt && entangled on every split
    std::string verdict;  // "bound entangled" or "criterion inconclusive"
};

// Full pipeline on a 4-qubit set of fewer than 16 rows: orthogonality,
// unextendibility under the finest split, PPT across all cuts, and the
// range criterion under each coarse-graining the complement state is
// claimed entangled for (the finest split, 2x2x4 and 4x4).  Inconclusive
// results are reported as such; the routine never claims separability.
StateCertificate certify(const ProductVectorSet& set, const SearchOptions& options = {});

// Counts of product vectors orthogonal to two sets agree whenever one set
// is carried to the other by exact local unitaries plus row and qubit
// permutations; used as a consistency check, not an equivalence decision.
bool count_equivalence_check(const ProductVectorSet& a, const ProductVectorSet& b,
                             const PartySplit& split_a, const PartySplit& split_b,
                             const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Helpers for robustness sweeps
// ---------------------------------------------------------------------------

// Census sizes for the drop-one-row sweep under one split: for each row,
// the isolated-solution count (nullopt when a continuous family appears).
struct DropOneCensus {
    PartySplit split;
    std::vector<std::optional<int>> counts;  // one entry per dropped row
    std::vector<bool> finite;
};

DropOneCensus drop_one_census(const ProductVectorSet& set, const PartySplit& split,
                              const SearchOptions& options = {});

} // namespace upb

#endif
