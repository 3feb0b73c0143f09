#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "upb/errors.hpp"
#include "upb/matrix.hpp"
#include "upb/qubit.hpp"
#include "upb/split.hpp"
#include "upb/unextend.hpp"
#include "upb/uom.hpp"

using namespace upb;

namespace {

// ---------------------------------------------------------------------------
// Independent oracle: enumerate ALL parties^rows assignments with no pruning
// and solve each leaf by per-party nullspaces.  Only usable for tiny sets.
// ---------------------------------------------------------------------------

struct OracleEnumeration {
    bool any_solution = false;  // some assignment leaves every party solvable
    bool infinite = false;      // some solvable leaf has a >=2-dim party
    std::set<std::string> isolated;  // canonical keys of all-1-dim leaves
};

OracleEnumeration oracle_enumerate(const GroupedSet& g) {
    OracleEnumeration out;
    const int m = g.size();
    const int parties = g.split.party_count();
    long long total = 1;
    for (int r = 0; r < m; ++r) total *= parties;

    std::vector<int> assign(static_cast<size_t>(m), 0);
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int r = 0; r < m; ++r) {
            assign[static_cast<size_t>(r)] = int(rest % parties);
            rest /= parties;
        }
        std::vector<std::vector<CMatrix>> bases(static_cast<size_t>(parties));
        bool dead = false;
        for (int p = 0; p < parties && !dead; ++p) {
            const int d = g.split.dim(p);
            std::vector<int> rows_here;
            for (int r = 0; r < m; ++r)
                if (assign[static_cast<size_t>(r)] == p) rows_here.push_back(r);
            if (rows_here.empty()) {
                // Unconstrained party: the whole space is admissible.
                for (int k = 0; k < d; ++k) {
                    std::vector<GaussRat> e(static_cast<size_t>(d));
                    e[static_cast<size_t>(k)] = GaussRat(1);
                    bases[static_cast<size_t>(p)].push_back(CMatrix::column(e));
                }
                continue;
            }
            CMatrix constraints(int(rows_here.size()), d);
            for (size_t i = 0; i < rows_here.size(); ++i) {
                CMatrix row_vec =
                    g.party_vectors[static_cast<size_t>(rows_here[i])][static_cast<size_t>(p)]
                        .adjoint();
                for (int c = 0; c < d; ++c) constraints(int(i), c) = row_vec(0, c);
            }
            bases[static_cast<size_t>(p)] = nullspace(constraints);
            if (bases[static_cast<size_t>(p)].empty()) dead = true;
        }
        if (dead) continue;
        out.any_solution = true;
        bool all_one = true;
        for (const auto& b : bases)
            if (b.size() != 1) all_one = false;
        if (!all_one) {
            out.infinite = true;
            continue;
        }
        CMatrix full = bases[0][0];
        for (int p = 1; p < parties; ++p) full = kron(full, bases[static_cast<size_t>(p)][0]);
        out.isolated.insert(monic(full).str());
    }
    return out;
}

// Deterministic tiny-set generator (mix of basis states and small finites).
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    int pick(int n) { return int(next() % std::uint64_t(n)); }
};

ProjQubit random_state(Lcg& rng) {
    switch (rng.pick(5)) {
        case 0: return ProjQubit::zero();
        case 1: return ProjQubit::one();
        default:
            return ProjQubit::finite(GaussRat(make_rat(rng.pick(5) - 2, 1 + rng.pick(2)),
                                              make_rat(rng.pick(5) - 2, 1 + rng.pick(2))));
    }
}

// Pairwise-orthogonal tiny sets by construction: each new row receives, for
// every earlier row, a dedicated qubit carrying the orthogonal state.  Needs
// rows <= qubits + 1.
ProductVectorSet random_orthogonal_tiny_set(Lcg& rng, int rows, int qubits) {
    REQUIRE(rows <= qubits + 1);
    ProductVectorSet set;
    set.name = "random";
    set.n_qubits = qubits;
    for (int s = 0; s < rows; ++s) {
        std::vector<ProjQubit> row;
        for (int q = 0; q < qubits; ++q) row.push_back(random_state(rng));
        std::vector<int> slots;
        for (int q = 0; q < qubits; ++q) slots.push_back(q);
        for (int i = int(slots.size()) - 1; i > 0; --i)
            std::swap(slots[size_t(i)], slots[size_t(rng.pick(i + 1))]);
        for (int r = 0; r < s; ++r)
            row[size_t(slots[size_t(r)])] =
                set.rows[size_t(r)][size_t(slots[size_t(r)])].orthogonal();
        set.rows.push_back(row);
    }
    return set;
}

// Full-vector of an extension witness.
CMatrix witness_vector(const ExtensionWitness& w) {
    CMatrix full = w.party_vectors[0];
    for (size_t p = 1; p < w.party_vectors.size(); ++p) full = kron(full, w.party_vectors[p]);
    return full;
}

// A 4-dim column is a product of two qubit states iff v0*v3 == v1*v2.
bool two_qubit_product(const CMatrix& v) {
    REQUIRE(v.rows() == 4);
    return v(0, 0) * v(3, 0) == v(1, 0) * v(2, 0);
}

std::vector<ProjQubit> qrow(std::initializer_list<ProjQubit> states) { return states; }

ProjQubit plus() { return ProjQubit::finite(1); }

}  // namespace

TEST_CASE("grouping tensors each row within parties") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto pairs = group(inst.set, PartySplit::ab_cd());
    REQUIRE(pairs.size() == 8);
    REQUIRE(pairs.party_vectors[0].size() == 2);
    CHECK(pairs.party_vectors[3][0].rows() == 4);
    CHECK(pairs.party_vectors[3][1].rows() == 4);
    for (int r = 0; r < 8; ++r) {
        CHECK(pairs.party_vectors[size_t(r)][0] ==
              kron(inst.set.at(r, 0).vec(), inst.set.at(r, 1).vec()));
        CHECK(pairs.party_vectors[size_t(r)][1] ==
              kron(inst.set.at(r, 2).vec(), inst.set.at(r, 3).vec()));
    }
    auto finest = group(inst.set, PartySplit::fourqubit());
    REQUIRE(finest.party_vectors[0].size() == 4);
    CHECK(finest.party_vectors[2][1] == inst.set.at(2, 1).vec());

    auto abcd = group(inst.set, PartySplit::a_b_cd());
    CHECK(abcd.party_vectors[0][0].rows() == 2);
    CHECK(abcd.party_vectors[0][2].rows() == 4);
}

TEST_CASE("orthogonality check reports the first violating pair") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    CHECK_FALSE(check_orthogonality(inst.set).has_value());

    ProductVectorSet bad;
    bad.name = "bad";
    bad.n_qubits = 2;
    bad.rows = {qrow({ProjQubit::zero(), ProjQubit::zero()}),
                qrow({ProjQubit::zero(), ProjQubit::one()}),
                qrow({ProjQubit::zero(), plus()})};
    // Rows 0 and 1 are orthogonal on the second qubit; row 2 clashes with both.
    auto viol = check_orthogonality(bad);
    REQUIRE(viol.has_value());
    CHECK(*viol == std::pair<int, int>{0, 2});
}

TEST_CASE("hand case: two opposite basis rows admit exactly the two swapped extensions") {
    ProductVectorSet set;
    set.name = "pair";
    set.n_qubits = 2;
    set.rows = {qrow({ProjQubit::zero(), ProjQubit::zero()}),
                qrow({ProjQubit::one(), ProjQubit::one()})};
    auto grouped = group(set, PartySplit::parse("A:B", 2));
    auto sols = enumerate_orthogonal(grouped);
    CHECK(sols.finite);
    CHECK(sols.isolated_count == 2);
    std::set<std::string> keys;
    for (const auto& fam : sols.families) {
        REQUIRE(fam.isolated());
        keys.insert(monic(kron(fam.party_bases[0][0], fam.party_bases[1][0])).str());
    }
    // |1,0> and |0,1>.
    CHECK(keys.count(monic(kron(ProjQubit::one().vec(), ProjQubit::zero().vec())).str()) == 1);
    CHECK(keys.count(monic(kron(ProjQubit::zero().vec(), ProjQubit::one().vec())).str()) == 1);
}

TEST_CASE("non-orthogonal input is rejected by every search entry point") {
    ProductVectorSet set;
    set.name = "triple";
    set.n_qubits = 2;
    set.rows = {qrow({ProjQubit::zero(), ProjQubit::zero()}),
                qrow({ProjQubit::one(), ProjQubit::one()}), qrow({plus(), plus()})};
    auto grouped = group(set, PartySplit::parse("A:B", 2));
    CHECK_THROWS_AS(find_extension(grouped), NotOrthogonal);
    CHECK_THROWS_AS(enumerate_orthogonal(grouped), NotOrthogonal);
    CHECK_THROWS_AS(is_upb(set, PartySplit::parse("A:B", 2)), NotOrthogonal);
}

TEST_CASE("search and census agree with the unpruned oracle") {
    Lcg rng(20260816);
    std::vector<std::pair<ProductVectorSet, PartySplit>> cases;
    for (int trial = 0; trial < 40; ++trial) {
        const int qubits = 2 + rng.pick(2);  // 2 or 3
        const int rows = 1 + rng.pick(qubits + 1);
        PartySplit split;
        if (qubits == 2)
            split = PartySplit::parse("A:B", 2);
        else
            split = rng.pick(2) ? PartySplit::abc() : PartySplit::a_bc();
        cases.emplace_back(random_orthogonal_tiny_set(rng, rows, qubits), split);
    }
    // Anchor the comparison on real unextendible sets: the three-qubit
    // shifts set at its finest split (3^4 = 81 assignments) and a full
    // eight-row family against its bipartite split (2^8 = 256).
    cases.emplace_back(instantiate(catalog_by_name("SHIFTS3"), 1).set, PartySplit::abc());
    cases.emplace_back(instantiate(catalog_by_name("F1"), 2).set, PartySplit::ab_cd());
    cases.emplace_back(drop_row(instantiate(catalog_by_name("F1"), 2).set, 3),
                       PartySplit::ab_cd());

    int finite_cases = 0, infinite_cases = 0, extendible = 0, unextendible = 0;
    for (size_t i = 0; i < cases.size(); ++i) {
        const auto& set = cases[i].first;
        const auto& split = cases[i].second;
        CAPTURE(i);
        CAPTURE(set.size());
        CAPTURE(split.str());

        auto grouped = group(set, split);
        auto want = oracle_enumerate(grouped);
        auto have = enumerate_orthogonal(grouped);
        auto witness = find_extension(grouped);

        CHECK(witness.has_value() == want.any_solution);
        CHECK(have.finite == !want.infinite);
        if (!want.infinite) {
            CHECK(have.isolated_count == int(want.isolated.size()));
            std::set<std::string> keys;
            for (const auto& fam : have.families) {
                REQUIRE(fam.isolated());
                CMatrix full = fam.party_bases[0][0];
                for (size_t p = 1; p < fam.party_bases.size(); ++p)
                    full = kron(full, fam.party_bases[p][0]);
                keys.insert(monic(full).str());
            }
            CHECK(keys == want.isolated);
        }
        if (witness) {
            // Soundness: the witness vector annihilates every row, and the
            // assignment names a party that certifies it.
            REQUIRE(witness->assignment.size() == size_t(set.size()));
            auto wv = witness_vector(*witness);
            CHECK_FALSE(wv.is_zero());
            for (int r = 0; r < set.size(); ++r) {
                CHECK(inner(set.full_vector(r), wv).is_zero());
                int p = witness->assignment[size_t(r)];
                CHECK(inner(grouped.party_vectors[size_t(r)][size_t(p)],
                            witness->party_vectors[size_t(p)])
                          .is_zero());
            }
        }
        (want.infinite ? infinite_cases : finite_cases) += 1;
        (want.any_solution ? extendible : unextendible) += 1;
    }
    // The mix must exercise all four outcomes.
    CHECK(finite_cases > 0);
    CHECK(infinite_cases > 0);
    CHECK(extendible > 0);
    CHECK(unextendible > 0);
}

TEST_CASE("every catalog family is a UPB under its claimed groupings") {
    for (const auto& name : {"F1", "F2", "F3", "F4", "F5", "F6"}) {
        CAPTURE(name);
        auto inst = instantiate(catalog_by_name(name), 1);
        CHECK(is_upb(inst.set, PartySplit::fourqubit()));
        CHECK(is_upb(inst.set, PartySplit::a_b_cd()));
        CHECK(is_upb(inst.set, PartySplit::ab_cd()));
        auto sols = enumerate_orthogonal(group(inst.set, PartySplit::ab_cd()));
        CHECK(sols.finite);
        CHECK(sols.isolated_count == 0);
        CHECK(sols.families.empty());
    }
    // The three-qubit shifts set is unextendible at the finest split but, as
    // four rows in a 2x4 bipartite space, must extend across A:BC.
    auto shifts = instantiate(catalog_by_name("SHIFTS3"), 1);
    CHECK(is_upb(shifts.set, PartySplit::abc()));
    CHECK_FALSE(is_upb(shifts.set, PartySplit::a_bc()));
}

TEST_CASE("dropping one row of F1 leaves exactly four bipartite solutions") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto grouped = group(drop_row(inst.set, 1), PartySplit::ab_cd());
    auto sols = enumerate_orthogonal(grouped);
    REQUIRE(sols.finite);
    REQUIRE(sols.isolated_count == 4);
    REQUIRE(sols.families.size() == 4);

    const auto& a = inst.assignment;
    auto key = [](const CMatrix& v) { return monic(v).str(); };
    std::set<std::string> full_keys, ab_keys;
    int entangled_cd = 0;
    for (const auto& fam : sols.families) {
        REQUIRE(fam.isolated());
        const CMatrix& ab = fam.party_bases[0][0];
        const CMatrix& cd = fam.party_bases[1][0];
        full_keys.insert(key(kron(ab, cd)));
        ab_keys.insert(key(ab));
        CHECK(two_qubit_product(ab));  // the AB half is always a product here
        if (!two_qubit_product(cd)) ++entangled_cd;
    }
    // The dropped row itself reappears among the solutions...
    CHECK(full_keys.count(key(inst.set.full_vector(0))) == 1);
    // ...together with the second fully product solution |f5',0,h3',0>...
    auto f5p = a.resolve(Label::prime("f5")).vec();
    auto h3p = a.resolve(Label::prime("h3")).vec();
    auto zero = ProjQubit::zero().vec();
    CHECK(full_keys.count(key(kron(kron(f5p, zero), kron(h3p, zero)))) == 1);
    // ...and two solutions whose CD half is entangled, with AB halves f5 x g3
    // and f5 x g3'.
    CHECK(entangled_cd == 2);
    auto f5 = a.resolve(Label::var("f5")).vec();
    auto g3 = a.resolve(Label::var("g3")).vec();
    auto g3p = a.resolve(Label::prime("g3")).vec();
    CHECK(ab_keys.count(key(kron(f5, g3))) == 1);
    CHECK(ab_keys.count(key(kron(f5, g3p))) == 1);

    // The four solutions are projectively distinct and span a rank-4 space.
    CHECK(int(full_keys.size()) == 4);
    CHECK(solution_span_rank(grouped, sols) == 4);

    // With solutions present, the seven rows are extendible.
    CHECK_FALSE(is_upb(drop_row(inst.set, 1), PartySplit::ab_cd()));

    // Across fresh seeds the census obeys the coincidence dichotomy:
    // six solutions when i3 = i4', four otherwise.
    for (std::uint64_t seed = 2; seed <= 5; ++seed) {
        CAPTURE(seed);
        auto other = instantiate(catalog_by_name("F1"), seed);
        bool coincide = other.assignment.resolve(Label::var("i3")) ==
                        other.assignment.resolve(Label::prime("i4"));
        auto census =
            enumerate_orthogonal(group(drop_row(other.set, 1), PartySplit::ab_cd()));
        CHECK(census.isolated_count == (coincide ? 6 : 4));
    }
}

TEST_CASE("the full-set census is empty while every drop-one census is not") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    CHECK(enumerate_orthogonal(group(inst.set, PartySplit::ab_cd())).isolated_count == 0);
    const int expected[8] = {4, 4, 6, 6, 6, 6, 4, 4};
    for (int row = 1; row <= 8; ++row) {
        CAPTURE(row);
        auto sols = enumerate_orthogonal(group(drop_row(inst.set, row), PartySplit::ab_cd()));
        CHECK(sols.finite);
        CHECK(sols.isolated_count == expected[row - 1]);
    }
}

TEST_CASE("drop_row is one-based and bounds-checked") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto dropped = drop_row(inst.set, 1);
    CHECK(dropped.size() == 7);
    for (int q = 0; q < 4; ++q) CHECK(dropped.at(0, q) == inst.set.at(1, q));
    auto last = drop_row(inst.set, 8);
    CHECK(last.size() == 7);
    for (int q = 0; q < 4; ++q) CHECK(last.at(6, q) == inst.set.at(6, q));
    CHECK_THROWS_AS(drop_row(inst.set, 0), IndexOutOfRange);
    CHECK_THROWS_AS(drop_row(inst.set, 9), IndexOutOfRange);
}

TEST_CASE("the census is equivariant under qubit permutations") {
    auto inst = instantiate(catalog_by_name("F1"), 3);
    auto dropped = drop_row(inst.set, 2);
    auto base = enumerate_orthogonal(group(dropped, PartySplit::ab_cd()));

    // Swapping the two halves maps AB:CD to itself.
    auto swapped = permute_qubits(dropped, {2, 3, 0, 1});
    auto swapped_sols = enumerate_orthogonal(group(swapped, PartySplit::ab_cd()));
    CHECK(swapped_sols.isolated_count == base.isolated_count);
    CHECK(swapped_sols.finite == base.finite);

    // Any relabeling preserves the finest-split census.
    auto finest = enumerate_orthogonal(group(dropped, PartySplit::fourqubit()));
    auto shuffled = permute_qubits(dropped, {1, 3, 0, 2});
    auto shuffled_sols = enumerate_orthogonal(group(shuffled, PartySplit::fourqubit()));
    CHECK(shuffled_sols.isolated_count == finest.isolated_count);
    CHECK(shuffled_sols.finite == finest.finite);
}

TEST_CASE("the census is invariant under scaled local unitaries") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto dropped = drop_row(inst.set, 1);
    auto base = enumerate_orthogonal(group(dropped, PartySplit::ab_cd()));

    CMatrix flip(2, 2), phase(2, 2), had(2, 2);
    flip(0, 1) = GaussRat(1);
    flip(1, 0) = GaussRat(1);
    phase(0, 0) = GaussRat(1);
    phase(1, 1) = GaussRat(Rat(0), Rat(1));  // diag(1, i)
    had(0, 0) = GaussRat(1);
    had(0, 1) = GaussRat(1);
    had(1, 0) = GaussRat(1);
    had(1, 1) = GaussRat(-1);

    auto rotated = apply_local_unitary(dropped, 0, flip);
    rotated = apply_local_unitary(rotated, 1, phase);
    rotated = apply_local_unitary(rotated, 3, had);
    auto sols = enumerate_orthogonal(group(rotated, PartySplit::ab_cd()));
    CHECK(sols.isolated_count == base.isolated_count);
    CHECK(sols.finite == base.finite);

    auto full = apply_local_unitary(inst.set, 2, had);
    CHECK(is_upb(full, PartySplit::ab_cd()));
    CHECK(is_upb(full, PartySplit::fourqubit()));
}

TEST_CASE("the work-estimate guard throws unless forced") {
    auto inst = instantiate(catalog_by_name("F1"), 1);
    auto grouped = group(inst.set, PartySplit::ab_cd());  // 2^8 = 256 assignments
    SearchOptions tight;
    tight.budget = 10;
    CHECK_THROWS_AS(find_extension(grouped, tight), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_orthogonal(grouped, tight), BudgetExceeded);
    SearchOptions forced;
    forced.budget = 10;
    forced.force = true;
    CHECK_FALSE(find_extension(grouped, forced).has_value());
    CHECK(enumerate_orthogonal(grouped, forced).isolated_count == 0);
    // The default budget admits the full catalog workload.
    CHECK_NOTHROW(find_extension(grouped));
}
