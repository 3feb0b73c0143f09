#include "doctest.h"

#include <vector>

#include "upb/errors.hpp"
#include "upb/matrix.hpp"
#include "upb/state.hpp"
#include "upb/uom.hpp"

using namespace upb;

namespace {

// Unnormalised |psi><psi| scaled to trace one.
DensityMatrix pure_state(const CMatrix& psi, int n_qubits) {
    DensityMatrix out;
    out.rho = psi * psi.adjoint() * (GaussRat(1) / inner(psi, psi));
    out.n_qubits = n_qubits;
    out.m_rows = (1 << n_qubits) - 1;
    return out;
}

CMatrix basis16(int k) {
    std::vector<GaussRat> e(16);
    e[size_t(k)] = GaussRat(1);
    return CMatrix::column(e);
}

}  // namespace

TEST_CASE("the complement state is an exact normalised projector") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto state = build_complement_state(inst.set);
    CHECK(state.n_qubits == 4);
    CHECK(state.m_rows == 8);
    REQUIRE(state.rho.rows() == 16);
    CHECK(state.rho.is_hermitian());
    CHECK(state.rho.trace() == GaussRat(1));
    CHECK(rank(state.rho) == 8);
    // (d - m) * rho is the projector onto the complement of the rows.
    CMatrix proj = state.rho * GaussRat(8);
    CHECK(proj * proj == proj);
    // Every row is annihilated exactly.
    for (int r = 0; r < inst.set.size(); ++r) {
        auto v = inst.set.full_vector(r);
        CHECK((state.rho * v).is_zero());
    }

    auto dropped = build_complement_state(drop_row(inst.set, 1));
    CHECK(dropped.m_rows == 7);
    CHECK(dropped.rho.trace() == GaussRat(1));
    CHECK(rank(dropped.rho) == 9);
    CMatrix dproj = dropped.rho * GaussRat(9);
    CHECK(dproj * dproj == dproj);

    auto shifts = build_complement_state(instantiate(catalog_by_name("SHIFTS3"), 1).set);
    CHECK(shifts.rho.rows() == 8);
    CHECK(shifts.rho.trace() == GaussRat(1));
    CHECK(rank(shifts.rho) == 4);
}

TEST_CASE("partial transpose is an involution and composes across disjoint subsets") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto rho = build_complement_state(inst.set).rho;
    for (const auto& cut : bipartite_cuts(4)) {
        auto pt = partial_transpose(rho, cut, 4);
        CHECK(pt.is_hermitian());
        CHECK(pt.trace() == GaussRat(1));
        CHECK(partial_transpose(pt, cut, 4) == rho);
    }
    auto ab = partial_transpose(partial_transpose(rho, {0}, 4), {1}, 4);
    CHECK(ab == partial_transpose(rho, {0, 1}, 4));
    // Transposing every qubit is the plain transpose.
    CHECK(partial_transpose(rho, {0, 1, 2, 3}, 4) == rho.transpose());
    // The maximally mixed state is fixed by every partial transpose.
    CMatrix mixed = CMatrix::identity(16) * (GaussRat(1) / GaussRat(16));
    CHECK(partial_transpose(mixed, {1, 3}, 4) == mixed);
}

TEST_CASE("partial transpose follows the most-significant-bit qubit convention") {
    // For psi = |00> + |11> on two qubits, transposing qubit 1 (the least
    // significant bit) sends |00><11| to |01><10|, yielding the swap matrix.
    CMatrix psi(4, 1);
    psi(0, 0) = GaussRat(1);
    psi(3, 0) = GaussRat(1);
    CMatrix rho = psi * psi.adjoint();
    auto pt = partial_transpose(rho, {1}, 2);
    CMatrix swap(4, 4);
    swap(0, 0) = GaussRat(1);
    swap(1, 2) = GaussRat(1);
    swap(2, 1) = GaussRat(1);
    swap(3, 3) = GaussRat(1);
    CHECK(pt == swap);
    CHECK_FALSE(is_psd(pt));  // the entangled pair is NPT
}

TEST_CASE("bipartite cuts enumerate one side of every split, qubit-0 side first") {
    const std::vector<std::vector<int>> four = {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {0, 3}};
    CHECK(bipartite_cuts(4) == four);
    const std::vector<std::vector<int>> three = {{0}, {1}, {2}};
    CHECK(bipartite_cuts(3) == three);
}

TEST_CASE("PPT holds for the complement state and fails for an entangled pure state") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    CHECK(is_ppt_all_cuts(build_complement_state(inst.set)));

    auto ghz = pure_state(basis16(0) + basis16(15), 4);  // |0000> + |1111>
    CHECK_FALSE(is_ppt_all_cuts(ghz));

    auto product = pure_state(basis16(5), 4);
    CHECK(is_ppt_all_cuts(product));
}

TEST_CASE("certification of a full family is bound entanglement on every split") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto cert = certify(inst.set);
    CHECK(cert.rank == 8);
    CHECK(cert.orthogonal);
    CHECK(cert.upb_fourqubit);
    CHECK(cert.ppt_all_cuts);
    CHECK(cert.bound_entangled);
    CHECK(cert.verdict == "bound entangled");
    REQUIRE(cert.ranges.size() == 3);
    CHECK(cert.ranges[0].split == PartySplit::fourqubit());
    CHECK(cert.ranges[1].split == PartySplit::a_b_cd());
    CHECK(cert.ranges[2].split == PartySplit::ab_cd());
    for (const auto& r : cert.ranges) {
        CHECK(r.finite);
        CHECK(r.solution_count == 0);
        CHECK(r.span_rank == 0);
        CHECK(r.threshold == 7);
        CHECK(r.entangled);
    }
}

TEST_CASE("certification of a seven-row subset stays bound entangled with a 9-dim range") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto cert = certify(drop_row(inst.set, 1));
    CHECK(cert.rank == 9);
    CHECK(cert.orthogonal);
    CHECK_FALSE(cert.upb_fourqubit);
    CHECK(cert.ppt_all_cuts);
    CHECK(cert.bound_entangled);
    CHECK(cert.verdict == "bound entangled");
    REQUIRE(cert.ranges.size() == 3);
    const int counts[3] = {2, 4, 4};
    for (size_t i = 0; i < 3; ++i) {
        CHECK(cert.ranges[i].solution_count == counts[i]);
        CHECK(cert.ranges[i].span_rank == counts[i]);
        CHECK(cert.ranges[i].threshold == 8);
        CHECK(cert.ranges[i].entangled);
    }
}

TEST_CASE("certification rejects wrong arity and reports non-orthogonal input") {
    auto shifts = instantiate(catalog_by_name("SHIFTS3"), 1);
    CHECK_THROWS_AS(certify(shifts.set), WrongShape);

    auto inst = instantiate(catalog_by_name("F1"), 1);
    ProductVectorSet bad;
    bad.name = "bad";
    bad.n_qubits = 4;
    bad.rows = {inst.set.rows[0], inst.set.rows[0]};
    auto cert = certify(bad);
    CHECK_FALSE(cert.orthogonal);
    CHECK_FALSE(cert.bound_entangled);
    CHECK(cert.verdict == "not orthogonal");
}

TEST_CASE("census counts are stable under relabelings and local unitaries") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto dropped = drop_row(inst.set, 1);

    CHECK(count_equivalence_check(dropped, permute_qubits(dropped, {2, 3, 0, 1}),
                                  PartySplit::ab_cd(), PartySplit::ab_cd()));

    CMatrix had(2, 2);
    had(0, 0) = GaussRat(1);
    had(0, 1) = GaussRat(1);
    had(1, 0) = GaussRat(1);
    had(1, 1) = GaussRat(-1);
    CHECK(count_equivalence_check(dropped, apply_local_unitary(dropped, 2, had),
                                  PartySplit::ab_cd(), PartySplit::ab_cd()));
    CHECK(count_equivalence_check(dropped, apply_local_unitary(dropped, 0, had),
                                  PartySplit::fourqubit(), PartySplit::fourqubit()));

    // Censuses under genuinely different groupings disagree (4 vs 2 here).
    CHECK_FALSE(count_equivalence_check(dropped, dropped, PartySplit::ab_cd(),
                                        PartySplit::fourqubit()));
}

TEST_CASE("the drop-one sweep reports every row's census under one split") {
    auto inst = instantiate(catalog_by_name("F1"), 1);

    auto pairs = drop_one_census(inst.set, PartySplit::ab_cd());
    CHECK(pairs.split == PartySplit::ab_cd());
    const int expected[8] = {4, 4, 6, 6, 6, 6, 4, 4};
    REQUIRE(pairs.counts.size() == 8);
    for (size_t i = 0; i < 8; ++i) {
        CAPTURE(i);
        CHECK(pairs.finite[i]);
        REQUIRE(pairs.counts[i].has_value());
        CHECK(*pairs.counts[i] == expected[i]);
    }

    auto finest = drop_one_census(inst.set, PartySplit::fourqubit());
    for (size_t i = 0; i < 8; ++i) {
        REQUIRE(finest.counts[i].has_value());
        CHECK(*finest.counts[i] == 2);
    }

    SearchOptions tight;
    tight.budget = 10;
    CHECK_THROWS_AS(drop_one_census(inst.set, PartySplit::ab_cd(), tight), BudgetExceeded);
}
