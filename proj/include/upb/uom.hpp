#ifndef UPB_UOM_HPP
#define UPB_UOM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "upb/qubit.hpp"

namespace upb {

// ---------------------------------------------------------------------------
// Symbolic grids
// ---------------------------------------------------------------------------

// One cell of a symbolic grid: the constant states "0"/"1", a vector
// variable "x", or its orthogonal partner "x'".
struct Label {
    enum class Kind { Zero, One, Var, Prime };
    Kind kind = Kind::Zero;
    std::string name;  // base variable name for Var/Prime

    static Label zero() { return {Kind::Zero, ""}; }
    static Label one() { return {Kind::One, ""}; }
    static Label var(const std::string& n) { return {Kind::Var, n}; }
    static Label prime(const std::string& n) { return {Kind::Prime, n}; }

    bool is_const() const { return kind == Kind::Zero || kind == Kind::One; }

    // The orthogonal-partner label: 0<->1, x<->x'.
    Label orth() const;

    bool operator==(const Label& o) const { return kind == o.kind && name == o.name; }
    bool operator!=(const Label& o) const { return !(*this == o); }
    bool operator<(const Label& o) const {
        return kind != o.kind ? kind < o.kind : name < o.name;
    }

    std::string str() const;                      // "0", "1", "x", "x'"
    static Label parse(const std::string& text);  // throws ParseError
};

// "subject may not equal any of the forbidden labels", all comparisons
// projective.  Subjects are base variable names.
struct Constraint {
    std::string subject;
    std::vector<Label> forbidden;
};

// A symbolic m x n grid plus its side constraints.  Rows are product
// vectors, columns are qubits.
struct UomSpec {
    std::string name;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Label>> grid;
    std::vector<Constraint> constraints;

    // Base variable names in first-appearance (row-major) order.
    std::vector<std::string> variables() const;

    const Label& cell(int r, int c) const { return grid[size_t(r)][size_t(c)]; }

    // Sanity-check shape and that constraints only mention grid variables.
    // Throws ParseError / UnknownVariable.
    void validate() const;

    // Flags constraint sets that look truncated: a variable bounded away
    // from "0" but not from "1".  The catalog transcribes its sources
    // verbatim, so genuine omissions are reported here instead of being
    // silently repaired.
    std::vector<std::string> lint() const;
};

// JSON import/export.  Schema:
// {"name": "...", "rows": m, "cols": n,
//  "grid": [["0","1","x","x'"], ...],
//  "constraints": [{"subject": "x", "forbidden": ["0","1","y"]}, ...]}
std::string uom_to_json(const UomSpec& spec);
UomSpec uom_from_json(const std::string& text);  // throws ParseError/UnknownVariable

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

// The built-in families F1..F6 with their constrained variants, plus the
// 3-qubit set SHIFTS3.  Transcribed verbatim from their source, including
// constraint sets that `lint` flags as suspicious.
const std::vector<UomSpec>& catalog();
const UomSpec& catalog_by_name(const std::string& name);  // throws UnknownVariable
std::vector<std::string> catalog_names();

// ---------------------------------------------------------------------------
// Instantiation
// ---------------------------------------------------------------------------

// An exact assignment of each base variable to a finite state Finite(c).
struct Instantiation {
    std::map<std::string, GaussRat> values;

    // Resolve a label: constants map to the basis states, x to Finite(c_x),
    // x' to the orthogonal partner.
    ProjQubit resolve(const Label& label) const;
};

// Rows of single-qubit states; the concrete object every verification
// routine works on.
struct ProductVectorSet {
    std::string name;
    int n_qubits = 0;
    std::vector<std::vector<ProjQubit>> rows;

    int size() const { return int(rows.size()); }
    const ProjQubit& at(int row, int qubit) const {
        return rows[size_t(row)][size_t(qubit)];
    }

    // Full 2^n-dimensional unnormalised vector of one row (Kronecker product
    // of the per-qubit representatives, qubit 0 leftmost).
    CMatrix full_vector(int row) const;

    // Throws WrongShape if rows have inconsistent arity or two rows carry
    // identical states on every qubit.
    void validate() const;
};

struct InstantiatedSet {
    UomSpec spec;
    std::uint64_t seed = 0;
    Instantiation assignment;
    ProductVectorSet set;
};

// Deterministically sample every variable as Finite(a+bi), with a and b
// rationals whose numerator lies in [-6, 6] and denominator in {1,2,3},
// rejecting rounds until all constraints hold and no two rows coincide.
// Throws ConstraintUnsatisfiable after 10000 rejected rounds.
InstantiatedSet instantiate(const UomSpec& spec, std::uint64_t seed);

// Resolve a grid under a given assignment (used by instantiate and tests).
ProductVectorSet resolve(const UomSpec& spec, const Instantiation& inst);

// ---------------------------------------------------------------------------
// Grid transforms (variant construction and negative controls)
// ---------------------------------------------------------------------------

// Substitute variable `var` by `replacement` ("0", "1", "y" or "y'")
// throughout the grid, rewriting var' accordingly, dropping constraints that
// become self-referential and renaming the rest.  The new spec is named
// `new_name`.
UomSpec force_equal(const UomSpec& spec, const std::string& var,
                    const Label& replacement, const std::string& new_name);

// Remove one forbidden item from one constraint (no-op if absent).
UomSpec drop_constraint(const UomSpec& spec, const std::string& subject,
                        const Label& forbidden_item);

// Flip one grid cell to an arbitrary label (negative-control corruption).
UomSpec corrupt_cell(const UomSpec& spec, int row, int col, const Label& label);

// ---------------------------------------------------------------------------
// Set transforms (exact symmetry operations on instantiated sets)
// ---------------------------------------------------------------------------

// Relabel qubits of every row: new qubit q holds old qubit perm[q].
ProductVectorSet permute_qubits(const ProductVectorSet& set, const std::vector<int>& perm);

// Apply a 2x2 matrix u with u^dag u = lambda*I (a scaled exact unitary, e.g.
// a permutation matrix, diag(1, i), or the unnormalised Hadamard
// [[1,1],[1,-1]]) to one qubit of every row.  Scaled unitaries preserve ray
// orthogonality, so every UPB property is invariant.  Throws WrongShape if
// u^dag u is not a nonzero scalar matrix.
ProductVectorSet apply_local_unitary(const ProductVectorSet& set, int qubit, const CMatrix& u);

// ---------------------------------------------------------------------------
// Symbolic invariants
// ---------------------------------------------------------------------------

// Per-column count of independent variable classes: each pair {x, x'}
// counts once, and the constant pair {0, 1} counts once if either appears.
std::vector<int> independent_variable_counts(const UomSpec& spec);

// Number of unordered row pairs whose labels coincide on both columns
// (a == b counts pairs equal in that single column).  Depends only on the
// label-equality structure, so it is invariant under renaming variables.
int coincidence_profile(const UomSpec& spec, int col_a, int col_b);

// Ordered variant: rows equal on col_a whose labels on col_b are orthogonal
// partners (0/1 or x/x').  Also relabeling-invariant.
int equal_orthogonal_profile(const UomSpec& spec, int col_a, int col_b);

// Column permutations preserved by the verification set-up: the group of
// order 8 generated by swapping columns 1,2, swapping columns 3,4 and
// exchanging the pairs, i.e. the stabiliser of the pairing {12|34}.
std::vector<std::array<int, 4>> allowed_column_symmetries();

// Outcome of comparing two 4-column specs across all allowed symmetries.
struct InequivalenceReport {
    enum class Verdict { DistinguishedByCounts, DistinguishedByCoincidence, Undistinguished };
    Verdict verdict = Verdict::Undistinguished;
    std::string detail;

    bool distinguished() const { return verdict != Verdict::Undistinguished; }
};

// Compare variable counts and coincidence tables over all allowed column
// symmetries.  "Undistinguished" does NOT assert equivalence; it only means
// these invariants cannot separate the two grids.
InequivalenceReport inequivalence_report(const UomSpec& a, const UomSpec& b);

} // namespace upb

#endif
