#ifndef UPB_STRUCTURE_HPP
#define UPB_STRUCTURE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "upb/qubit.hpp"
#include "upb/uom.hpp"

namespace upb {

// ---------------------------------------------------------------------------
// Orthogonality multiplicities
// ---------------------------------------------------------------------------

// Census of one column of an instantiated set: the distinct single-qubit
// states with multiplicities (first-appearance order), and the o-number
//   p_j = sum over unordered orthogonal pairs {x, y} present of mu(x)*mu(y),
// the number of row pairs orthogonal in this column.
struct ColumnProfile {
    int column = 0;
    std::vector<std::pair<ProjQubit, int>> multiplicities;
    long long o_number = 0;
};

std::vector<ColumnProfile> o_numbers(const ProductVectorSet& set);

// Every unordered row pair of a pairwise-orthogonal set is orthogonal in at
// least one column, so sum_j p_j >= m(m-1)/2.  holds = false certifies the
// set cannot be pairwise orthogonal; holds = true alone proves nothing.
struct BoundCheck {
    std::vector<long long> p;  // per-column o-numbers
    long long sum = 0;
    long long threshold = 0;   // m(m-1)/2
    bool holds = false;
};

BoundCheck bound_check(const ProductVectorSet& set);

// ---------------------------------------------------------------------------
// Extremal partitions
// ---------------------------------------------------------------------------

// Maximum of a1*a2 + a3*a4 + ... + a_{2n-1}*a_{2n} over positive integers
// with sum p: with q = p - 2n + 2 the maximum is
//   ceil(q/2) * floor(q/2) + n - 1,
// attained (uniquely up to order) by the pair (ceil(q/2), floor(q/2)) plus
// n - 1 pairs (1, 1).  Bounds the o-number of a column whose 2n entries
// split into n orthogonality classes.  Throws BadArity unless p >= 2n >= 2.
struct MaxsumResult {
    int p = 0;
    int n = 0;
    long long value = 0;
    std::vector<int> extremal;  // 2n entries attaining the maximum
};

MaxsumResult maxsum(int p, int n);

// Independent brute force over all compositions of p into 2n positive
// parts.  Guarded to p <= 24, n <= 6; throws SetTooLarge beyond that.
long long maxsum_oracle(int p, int n);

// ---------------------------------------------------------------------------
// Exclusion predicates
// ---------------------------------------------------------------------------

// Structural conditions on an 8-row 4-qubit set, each of which rules out
// unextendibility under the AB:CD coarse-graining: whenever one fires, a
// product extension exists in C^4 (x) C^4.  Matching is exact projective
// equality / orthogonality of single-qubit states.  The search engine never
// assumes these; they prune candidates and cross-check the engine.
struct FiredCondition {
    std::string name;    // stable identifier of the condition
    std::string detail;  // the witnessing rows/qubits
};

// Throws WrongShape unless the set is 8 rows of 4 qubits.
std::vector<FiredCondition> exclusion_predicates(const ProductVectorSet& set);

// ---------------------------------------------------------------------------
// Classification witnesses
// ---------------------------------------------------------------------------

// Membership direction of the catalog classification clauses: each named
// row/column pattern is checked to hold on the catalog families recorded
// for it.  The completeness direction (no family outside the list fits) is
// out of scope.
struct ClassificationWitness {
    std::string clause;                 // pattern identifier
    std::vector<std::string> families;  // catalog names the pattern is checked on
    bool present = false;               // pattern found in every listed family
    std::string detail;
};

std::vector<ClassificationWitness> classification_witnesses(std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Fuzzing
// ---------------------------------------------------------------------------

// Deterministic random pairwise-orthogonal product set (rows x cols qubits),
// built by recursively splitting the row set along a fresh column with a
// pair of orthogonal states and filling unused cells with random states.
// Unlike the catalog families it freely produces large multiplicities, so
// exclusion conditions fire on a sizable fraction of seeds.  Requires
// rows <= 2^cols (throws SetTooLarge).
ProductVectorSet gen_random_orthogonal(std::uint64_t seed, int rows = 8, int cols = 4);

} // namespace upb

#endif
