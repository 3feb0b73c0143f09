#ifndef UPB_GEUPB_HPP
#define UPB_GEUPB_HPP

#include <optional>
#include <string>
#include <vector>

#include "upb/split.hpp"
#include "upb/state.hpp"
#include "upb/unextend.hpp"
#include "upb/uom.hpp"

namespace upb {

// ---------------------------------------------------------------------------
// Genuine unextendibility across coarse-grainings
// ---------------------------------------------------------------------------

// Verdict for one bipartition in a GE sweep.
struct SplitVerdict {
    enum class Kind {
        Unextendible,   // bipartite UPB across this cut
        Extendible,     // generic search produced a witness
        TwoByNAutoFail, // 2 x N cut: witness built constructively
    };

    PartySplit split;
    Kind kind = Kind::Extendible;
    // Populated for the two extendible kinds.
    std::optional<ExtensionWitness> witness;

    bool unextendible() const { return kind == Kind::Unextendible; }
};

struct GeVerdict {
    bool orthogonal = false;
    std::vector<SplitVerdict> splits;
    int unextendible_count = 0;
    bool ge = false;         // bipartite UPB across every cut
    bool almost_ge = false;  // bipartite UPB across every cut with both sides dim >= 4
    std::string summary;
};

// Check bipartite unextendibility across every bipartition of the qubit set
// (n=4: A:BCD, B:ACD, C:ABD, D:ABC, AB:CD, AC:BD, AD:BC).  Cuts with a
// 2-dimensional side are settled constructively: with m < 2N rows such a cut
// always extends, and the witness is found by sweeping the qubit-side ray
// classes (pick the qubit vector orthogonal to one class, solve the leftover
// rows on the N side).  Throws NotOrthogonal on a non-orthogonal set and
// SetTooLarge when the set has no orthocomplement (m >= 2^n).
GeVerdict ge_check(const ProductVectorSet& set, const SearchOptions& options = {});

// All bipartitions examined by ge_check, one-qubit sides first.
std::vector<PartySplit> ge_splits(int n_qubits);

// ---------------------------------------------------------------------------
// Tensor constructions
// ---------------------------------------------------------------------------

// Party-wise tensor of two sets: row (i, j) of the result (index i*|T|+j)
// carries S_i's states followed by T_j's states; under the split pairing
// party k of S with party k of T the result is a product set on the merged
// parties.  Used to manufacture larger unextendible sets from smaller ones.
ProductVectorSet tensor_sets(const ProductVectorSet& s, const ProductVectorSet& t);

// The split on s.n_qubits + t.n_qubits merging party k of split_s with
// party k of split_t.  Throws ArityMismatch when party counts differ.
PartySplit tensor_split(const PartySplit& split_s, const PartySplit& split_t);

// Cyclic relabeling helper: the same set with qubit labels rotated by k.
ProductVectorSet cyclic_relabel(const ProductVectorSet& set, int k);

} // namespace upb

#endif
