#ifndef UPB_SPLIT_HPP
#define UPB_SPLIT_HPP

#include <string>
#include <vector>

#include "upb/errors.hpp"

namespace upb {

// A coarse-graining of an n-qubit system into parties.  Parties are ordered
// lists of 0-based qubit indices; together they must partition {0..n-1}.
// Party dimension is 2^arity.
struct PartySplit {
    std::vector<std::vector<int>> parties;
    int n_qubits = 0;

    PartySplit() = default;
    PartySplit(std::vector<std::vector<int>> p, int n);

    int party_count() const { return int(parties.size()); }
    int dim(int party) const { return 1 << parties[size_t(party)].size(); }

    // "AB:CD"-style name using letters A.. for qubits 0.. .
    std::string str() const;

    bool operator==(const PartySplit& o) const {
        return parties == o.parties && n_qubits == o.n_qubits;
    }

    // --- presets for 4 qubits ---
    static PartySplit fourqubit();  // A:B:C:D
    static PartySplit ab_cd();      // AB:CD
    static PartySplit ac_bd();      // AC:BD
    static PartySplit ad_bc();      // AD:BC
    static PartySplit a_b_cd();     // A:B:CD
    // --- presets for 3 qubits ---
    static PartySplit abc();        // A:B:C
    static PartySplit a_bc();       // A:BC
    // One qubit versus the rest of an n-qubit system.
    static PartySplit qubit_vs_rest(int qubit, int n);

    // Parse "AB:CD", "A:B:CD", ... against an n-qubit system.  As a
    // convenience the undivided string "ABCD" (all qubits, no colon) denotes
    // the finest split A:B:C:D.  Throws WrongShape on anything that is not a
    // partition of the qubits.
    static PartySplit parse(const std::string& text, int n_qubits);
};

} // namespace upb

#endif
