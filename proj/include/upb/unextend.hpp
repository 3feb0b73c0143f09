#ifndef UPB_UNEXTEND_HPP
#define UPB_UNEXTEND_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upb/matrix.hpp"
#include "upb/split.hpp"
#include "upb/uom.hpp"

namespace upb {

// ---------------------------------------------------------------------------
// Product sets under a coarse-graining
// ---------------------------------------------------------------------------

// A product-vector set regrouped under a split: each row becomes a tuple of
// party vectors (dimension 2^arity each), obtained by tensoring the row's
// single-qubit states within each party.
struct GroupedSet {
    PartySplit split;
    // party_vectors[row][party] is a dim(party) x 1 column.
    std::vector<std::vector<CMatrix>> party_vectors;

    int size() const { return int(party_vectors.size()); }
};

GroupedSet group(const ProductVectorSet& set, const PartySplit& split);

// First violating pair (row_a, row_b) if the full vectors are not pairwise
// orthogonal, nullopt otherwise.  Orthogonality is split-independent, so
// this works on the ungrouped set.
std::optional<std::pair<int, int>> check_orthogonality(const ProductVectorSet& set);

// ---------------------------------------------------------------------------
// Extension search
// ---------------------------------------------------------------------------

// A product vector orthogonal to every member of the set: one column per
// party, plus the row -> killing-party assignment that produced it.
struct ExtensionWitness {
    std::vector<CMatrix> party_vectors;
    std::vector<int> assignment;  // assignment[row] = party index
};

struct SearchOptions {
    bool force = false;               // ignore the work-estimate guard
    double budget = 1e9;              // max assignments parties^rows
};

// Decide extendibility under one split by assigning every row to a party it
// must be killed in, maintaining per-party exact echelon bases and pruning
// any branch where a party's rank reaches its dimension.  Complete: every
// orthogonal product vector induces such an assignment.  Throws
// BudgetExceeded when parties^rows exceeds options.budget and !force.
std::optional<ExtensionWitness> find_extension(const GroupedSet& grouped,
                                               const SearchOptions& options = {});

// True iff the set is pairwise orthogonal and admits no product extension
// under the split.  Throws NotOrthogonal on a non-orthogonal set.
bool is_upb(const ProductVectorSet& set, const PartySplit& split,
            const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Exhaustive solution census
// ---------------------------------------------------------------------------

// All product vectors orthogonal to a *subset* of the rows (typically the
// set with one row dropped).  Solutions come in two flavours: isolated
// points of the projective search space, or continuous families where some
// party has a nullspace of dimension >= 2.
struct SolutionFamily {
    std::vector<int> assignment;
    // Per party: an orthonormal-free exact basis of the admissible vectors.
    std::vector<std::vector<CMatrix>> party_bases;

    bool isolated() const;  // every basis has a single element
};

struct OrthogonalSolutionSet {
    bool finite = true;               // false iff any family is continuous
    std::vector<SolutionFamily> families;
    int isolated_count = 0;           // distinct projective product solutions
};

// Enumerate every assignment leaf with a nonzero nullspace in each party,
// deduplicating isolated solutions across assignments by their canonical
// (monic per-party) Kronecker key.  Throws BudgetExceeded past the guard.
OrthogonalSolutionSet enumerate_orthogonal(const GroupedSet& grouped,
                                           const SearchOptions& options = {});

// Rank of the span of all solution vectors (isolated points plus every
// basis tensor combination of continuous families).
int solution_span_rank(const GroupedSet& grouped, const OrthogonalSolutionSet& sols);

// The set with 1-based row `row` removed.
ProductVectorSet drop_row(const ProductVectorSet& set, int row);

} // namespace upb

#endif
