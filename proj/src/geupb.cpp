#include "upb/geupb.hpp"

#include <algorithm>

namespace upb {

std::vector<PartySplit> ge_splits(int n_qubits) {
    std::vector<PartySplit> splits;
    for (const auto& side : bipartite_cuts(n_qubits)) {
        std::vector<int> rest;
        for (int q = 0; q < n_qubits; ++q)
            if (std::find(side.begin(), side.end(), q) == side.end()) rest.push_back(q);
        splits.push_back(PartySplit({side, rest}, n_qubits));
    }
    return splits;
}

namespace {

// Extension witness for a cut with a 2-dimensional side.  With m < 2N rows
// such a cut never supports an unextendible set: sweep the qubit-side ray
// classes -- choosing the qubit vector orthogonal to one class leaves at
// most the other rows to kill on the N side, and some choice (possibly the
// empty one, killing everything on the N side) always leaves that side a
// nonzero nullspace.
ExtensionWitness two_by_n_witness(const ProductVectorSet& set, const PartySplit& split) {
    int qubit_party = -1;
    for (int p = 0; p < split.party_count(); ++p)
        if (split.parties[size_t(p)].size() == 1) { qubit_party = p; break; }
    if (qubit_party < 0) throw Error("two_by_n_witness: no 2-dimensional side");
    const int other = qubit_party == 0 ? 1 : 0;
    const int qa = split.parties[size_t(qubit_party)][0];
    const int m = set.size();
    GroupedSet grouped = group(set, split);
    const int dim_other = grouped.party_vectors[0][size_t(other)].rows();

    // Candidate qubit-side classes: one per distinct ray among the rows,
    // plus the empty class (every row killed on the N side).
    std::vector<std::optional<ProjQubit>> candidates;
    candidates.push_back(std::nullopt);
    for (int i = 0; i < m; ++i) {
        const ProjQubit& c = set.at(i, qa);
        bool fresh = true;
        for (const auto& seen : candidates)
            if (seen && *seen == c) { fresh = false; break; }
        if (fresh) candidates.push_back(c);
    }

    for (const auto& cls : candidates) {
        std::vector<int> leftover;
        for (int i = 0; i < m; ++i)
            if (!cls || !(set.at(i, qa) == *cls)) leftover.push_back(i);

        CMatrix b = CMatrix::column(std::vector<GaussRat>(size_t(dim_other)));
        if (leftover.empty()) {
            b.at(0, 0) = GaussRat(1);
        } else {
            CMatrix constraints(int(leftover.size()), dim_other);
            for (size_t r = 0; r < leftover.size(); ++r) {
                const CMatrix& v = grouped.party_vectors[size_t(leftover[r])][size_t(other)];
                for (int c = 0; c < dim_other; ++c) constraints.at(int(r), c) = v.at(c, 0).conj();
            }
            auto basis = nullspace(constraints);
            if (basis.empty()) continue;
            b = monic(basis[0]);
        }

        ExtensionWitness w;
        w.party_vectors.resize(2);
        w.party_vectors[size_t(qubit_party)] =
            cls ? cls->orthogonal().vec() : ProjQubit::zero().vec();
        w.party_vectors[size_t(other)] = b;
        w.assignment.assign(size_t(m), other);
        if (cls)
            for (int i = 0; i < m; ++i)
                if (set.at(i, qa) == *cls) w.assignment[size_t(i)] = qubit_party;

        // Exact soundness check before handing the witness out.
        for (int i = 0; i < m; ++i) {
            GaussRat prod(1);
            for (int p = 0; p < 2; ++p)
                prod = prod * inner(grouped.party_vectors[size_t(i)][size_t(p)],
                                    w.party_vectors[size_t(p)]);
            if (!prod.is_zero()) throw Error("two_by_n_witness: candidate not orthogonal");
        }
        return w;
    }
    throw Error("two_by_n_witness: no witness found on a 2 x N cut");
}

} // namespace

GeVerdict ge_check(const ProductVectorSet& set, const SearchOptions& options) {
    if (auto bad = check_orthogonality(set))
        throw NotOrthogonal(set.name + ": rows " + std::to_string(bad->first + 1) + " and " +
                            std::to_string(bad->second + 1) + " are not orthogonal");
    if (set.size() >= (1 << set.n_qubits))
        throw SetTooLarge(set.name + ": no orthocomplement left to probe");

    GeVerdict verdict;
    verdict.orthogonal = true;
    verdict.almost_ge = true;
    for (const auto& split : ge_splits(set.n_qubits)) {
        SplitVerdict sv;
        sv.split = split;
        bool has_qubit_side = false;
        for (const auto& party : split.parties) has_qubit_side |= party.size() == 1;
        if (has_qubit_side) {
            sv.kind = SplitVerdict::Kind::TwoByNAutoFail;
            sv.witness = two_by_n_witness(set, split);
        } else if (auto w = find_extension(group(set, split), options)) {
            sv.kind = SplitVerdict::Kind::Extendible;
            sv.witness = std::move(w);
        } else {
            sv.kind = SplitVerdict::Kind::Unextendible;
        }
        if (sv.unextendible())
            ++verdict.unextendible_count;
        else if (!has_qubit_side)
            verdict.almost_ge = false;
        verdict.splits.push_back(std::move(sv));
    }
    verdict.ge = verdict.unextendible_count == int(verdict.splits.size());
    verdict.summary = std::to_string(verdict.unextendible_count) + "/" +
                      std::to_string(verdict.splits.size()) + " cuts unextendible; " +
                      (verdict.ge         ? "genuinely unextendible"
                       : verdict.almost_ge ? "almost genuinely unextendible (only cuts with a "
                                             "2-dimensional side extend)"
                                           : "not genuinely unextendible");
    return verdict;
}

ProductVectorSet tensor_sets(const ProductVectorSet& s, const ProductVectorSet& t) {
    ProductVectorSet out;
    out.name = s.name + " (x) " + t.name;
    out.n_qubits = s.n_qubits + t.n_qubits;
    for (const auto& srow : s.rows)
        for (const auto& trow : t.rows) {
            std::vector<ProjQubit> row = srow;
            row.insert(row.end(), trow.begin(), trow.end());
            out.rows.push_back(std::move(row));
        }
    out.validate();
    return out;
}

PartySplit tensor_split(const PartySplit& split_s, const PartySplit& split_t) {
    if (split_s.party_count() != split_t.party_count())
        throw ArityMismatch("tensor_split: party counts differ");
    std::vector<std::vector<int>> parties;
    for (int p = 0; p < split_s.party_count(); ++p) {
        std::vector<int> merged = split_s.parties[size_t(p)];
        for (int q : split_t.parties[size_t(p)]) merged.push_back(q + split_s.n_qubits);
        parties.push_back(std::move(merged));
    }
    return PartySplit(parties, split_s.n_qubits + split_t.n_qubits);
}

ProductVectorSet cyclic_relabel(const ProductVectorSet& set, int k) {
    const int n = set.n_qubits;
    const int shift = ((k % n) + n) % n;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) perm[size_t(q)] = (q + shift) % n;
    ProductVectorSet out = permute_qubits(set, perm);
    out.name = set.name + " rotated by " + std::to_string(shift);
    return out;
}

} // namespace upb
