#include "upb/claims.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "upb/errors.hpp"
#include "upb/geupb.hpp"
#include "upb/state.hpp"
#include "upb/structure.hpp"
#include "upb/unextend.hpp"
#include "upb/uom.hpp"

namespace upb {

namespace {

const std::array<const char*, 6> kFamilies = {"F1", "F2", "F3", "F4", "F5", "F6"};

// Failure collector for one claim: require() records a message when a check
// fails, finish() seals the result.
struct Check {
    ClaimResult r;

    Check(const std::string& slug, const std::string& title) {
        r.slug = slug;
        r.title = title;
    }

    void require(bool ok, const std::string& what) {
        if (!ok) r.failures.push_back(what);
    }

    ClaimResult finish(const std::string& detail) {
        r.detail = detail;
        r.pass = r.failures.empty();
        return r;
    }
};

std::string tag(const std::string& family, std::uint64_t seed) {
    return family + " seed " + std::to_string(seed);
}

// Soundness of an extension witness, checked from first principles: every
// party vector is nonzero and each row has at least one party on which the
// witness factor is orthogonal to the row factor (the full inner product is
// the product of the per-party ones).
bool witness_kills_all_rows(const GroupedSet& grouped, const ExtensionWitness& w) {
    for (const auto& pv : w.party_vectors)
        if (pv.is_zero()) return false;
    for (int row = 0; row < grouped.size(); ++row) {
        bool killed = false;
        for (int p = 0; p < grouped.split.party_count() && !killed; ++p)
            killed = inner(w.party_vectors[size_t(p)],
                           grouped.party_vectors[size_t(row)][size_t(p)])
                         .is_zero();
        if (!killed) return false;
    }
    return true;
}

// Isolated-solution count of the bipartite (4x4) product vectors orthogonal
// to the set with its first row dropped.  The count is taken under the AB:CD
// grouping: the claimed censuses include vectors whose two-qubit halves are
// entangled, which the finest grouping cannot see.  nullopt if a continuous
// family shows up (none of the catalogued cases has one).
std::optional<int> drop_first_census(const ProductVectorSet& set) {
    auto sols = enumerate_orthogonal(group(drop_row(set, 1), PartySplit::ab_cd()));
    if (!sols.finite) return std::nullopt;
    return sols.isolated_count;
}

std::string census_str(const std::optional<int>& census) {
    return census ? std::to_string(*census) : std::string("continuous");
}

// ---------------------------------------------------------------------------
// 1. orthogonality
// ---------------------------------------------------------------------------

ClaimResult claim_orthogonality(const std::vector<std::uint64_t>& seeds) {
    Check c("orthogonality", "Every family instantiates to a pairwise-orthogonal set");
    int sets = 0;
    for (const char* family : kFamilies) {
        const UomSpec& spec = catalog_by_name(family);
        for (auto seed : seeds) {
            auto bad = check_orthogonality(instantiate(spec, seed).set);
            ++sets;
            std::ostringstream what;
            what << tag(family, seed);
            if (bad)
                what << ": rows " << (bad->first + 1) << "," << (bad->second + 1)
                     << " have nonzero inner product";
            c.require(!bad.has_value(), what.str());
        }
    }
    std::ostringstream d;
    d << sets << " instantiations, 28 row pairs each, every inner product exactly zero";
    return c.finish(d.str());
}

// ---------------------------------------------------------------------------
// 2. upb-three-splits
// ---------------------------------------------------------------------------

ClaimResult claim_upb_three_splits(const std::vector<std::uint64_t>& seeds) {
    Check c("upb-three-splits",
            "F1..F6 are unextendible under the finest, 2x2x4 and 4x4 groupings");
    const std::array<PartySplit, 3> splits = {
        PartySplit::fourqubit(), PartySplit::a_b_cd(), PartySplit::ab_cd()};
    int checks = 0;
    for (const char* family : kFamilies) {
        const UomSpec& spec = catalog_by_name(family);
        for (auto seed : seeds) {
            auto set = instantiate(spec, seed).set;
            for (const auto& split : splits) {
                ++checks;
                c.require(is_upb(set, split),
                          tag(family, seed) + " is extendible under " + split.str());
            }
        }
    }
    std::ostringstream d;
    d << checks << " unextendibility searches (6 families x " << seeds.size()
      << " seeds x 3 groupings), all exhausted without a witness";
    return c.finish(d.str());
}

// ---------------------------------------------------------------------------
// 3. table1
// ---------------------------------------------------------------------------

ClaimResult claim_table1() {
    Check c("table1", "Per-column independent-variable counts match the recorded values");
    const std::map<std::string, std::vector<int>> expected = {
        {"F1", {2, 2, 2, 3}}, {"F2", {2, 2, 2, 4}}, {"F3", {2, 2, 3, 2}},
        {"F4", {2, 3, 2, 3}}, {"F5", {3, 2, 2, 2}}, {"F6", {2, 2, 2, 4}}};
    std::ostringstream d;
    for (const char* family : kFamilies) {
        auto counts = independent_variable_counts(catalog_by_name(family));
        const auto& want = expected.at(family);
        std::ostringstream row;
        row << family << ":[";
        for (size_t i = 0; i < counts.size(); ++i)
            row << (i ? "," : "") << counts[size_t(i)];
        row << "]";
        d << row.str() << " ";
        c.require(counts == want, row.str() + " does not match the recorded counts");
    }
    return c.finish(d.str() + "(all six match)");
}

// ---------------------------------------------------------------------------
// 4. inequivalence
// ---------------------------------------------------------------------------

ClaimResult claim_inequivalence() {
    Check c("inequivalence",
            "All 15 family pairs are separated by symmetry-stable invariants");
    int by_counts = 0, by_coincidence = 0;
    for (size_t i = 0; i < kFamilies.size(); ++i) {
        for (size_t j = i + 1; j < kFamilies.size(); ++j) {
            auto rep = inequivalence_report(catalog_by_name(kFamilies[i]),
                                            catalog_by_name(kFamilies[j]));
            c.require(rep.distinguished(),
                      std::string(kFamilies[i]) + " vs " + kFamilies[j] +
                          " not separated: " + rep.detail);
            if (rep.verdict == InequivalenceReport::Verdict::DistinguishedByCounts)
                ++by_counts;
            if (rep.verdict == InequivalenceReport::Verdict::DistinguishedByCoincidence)
                ++by_coincidence;
        }
    }
    auto f3f6 = inequivalence_report(catalog_by_name("F3"), catalog_by_name("F6"));
    c.require(f3f6.verdict == InequivalenceReport::Verdict::DistinguishedByCoincidence,
              "F3 vs F6 expected a coincidence-profile separation, got: " + f3f6.detail);
    std::ostringstream d;
    d << "15/15 pairs separated (" << by_counts << " by variable counts, "
      << by_coincidence << " by coincidence profiles); F3 vs F6 separated by the "
      << "coincidence profile";
    return c.finish(d.str());
}

// ---------------------------------------------------------------------------
// 5. solution-counts
// ---------------------------------------------------------------------------

ClaimResult claim_solution_counts(const std::vector<std::uint64_t>& seeds) {
    Check c("solution-counts",
            "Censuses of product vectors orthogonal to the seven-row subsets");

    // Whether the instantiated values satisfy x = y' (projectively).
    auto coincide = [](const InstantiatedSet& inst, const std::string& x,
                       const std::string& y) {
        return inst.assignment.resolve(Label::var(x)) ==
               inst.assignment.resolve(Label::prime(y));
    };

    // Forced variants built on the fly (the catalog carries the rest).
    const UomSpec f3_forced =
        force_equal(catalog_by_name("F3"), "h3", Label::prime("h4"), "F3(h3=h4')");
    const UomSpec f5_forced =
        force_equal(catalog_by_name("F5"), "f5", Label::prime("f6"), "F5(f5=f6')");

    std::set<int> f6_generic_counts;
    int censuses = 0;

    auto check_census = [&](const UomSpec& spec, std::uint64_t seed, int expect) {
        auto census = drop_first_census(instantiate(spec, seed).set);
        ++censuses;
        c.require(census.has_value() && *census == expect,
                  tag(spec.name, seed) + ": census " + census_str(census) +
                      ", expected " + std::to_string(expect));
    };

    for (auto seed : seeds) {
        // F1: 4 generically, 6 exactly when the instantiation lands on i3 = i4'.
        {
            auto inst = instantiate(catalog_by_name("F1"), seed);
            auto census = drop_first_census(inst.set);
            ++censuses;
            int expect = coincide(inst, "i3", "i4") ? 6 : 4;
            c.require(census.has_value() && *census == expect,
                      tag("F1", seed) + ": census " + census_str(census) +
                          ", expected " + std::to_string(expect));
        }
        check_census(catalog_by_name("F1(i3=i4')"), seed, 6);
        check_census(catalog_by_name("F2(i2=i3,i4=0)"), seed, 6);

        // F3: the two published condition readings disagree; the one naming
        // variables F3 actually has (h3 = h4') is checked as a biconditional,
        // the other (i3 = i4') names variables absent from F3 and is logged
        // as inapplicable in the claim detail.  The coincident census is 6,
        // one more than the published 5: the sixth vector (an entangled
        // first-pair state paired with |h3', i2>) is verified exactly by the
        // enumeration and is absent from the published list.
        {
            auto inst = instantiate(catalog_by_name("F3"), seed);
            auto census = drop_first_census(inst.set);
            ++censuses;
            int expect = coincide(inst, "h3", "h4") ? 6 : 4;
            c.require(census.has_value() && *census == expect,
                      tag("F3", seed) + ": census " + census_str(census) +
                          ", expected " + std::to_string(expect));
        }
        check_census(f3_forced, seed, 6);

        check_census(catalog_by_name("F4"), seed, 4);

        // F5: same situation; the applicable reading is f5 = f6', the other
        // (i5 = i6') names variables absent from F5.
        {
            auto inst = instantiate(catalog_by_name("F5"), seed);
            auto census = drop_first_census(inst.set);
            ++censuses;
            int expect = coincide(inst, "f5", "f6") ? 6 : 4;
            c.require(census.has_value() && *census == expect,
                      tag("F5", seed) + ": census " + census_str(census) +
                          ", expected " + std::to_string(expect));
        }
        check_census(f5_forced, seed, 6);

        check_census(catalog_by_name("F6(i2=i3)"), seed, 6);

        // Generic F6 is logged, not asserted: the count is only pinned for
        // the i2=i3 variant, so the generic value is informational.
        {
            auto census = drop_first_census(instantiate(catalog_by_name("F6"), seed).set);
            ++censuses;
            if (census) f6_generic_counts.insert(*census);
        }
    }

    std::ostringstream d;
    d << censuses << " censuses. F1: 4 (6 iff i3=i4'); F1(i3=i4'): 6; "
      << "F2(i2=i3,i4=0): 6; F3: 4 generically, within the published {4,5}; "
      << "the i3=i4' reading names variables F3 lacks; F3(h3=h4'): measured 6 "
      << "(one above the published 5; the sixth solution is exhibited and "
      << "verified by the enumeration); F4: 4; F5: 4 (6 iff f5=f6'; the "
      << "i5=i6' reading names variables F5 lacks); F5(f5=f6'): 6; "
      << "F6(i2=i3): 6. Generic F6 censuses observed (informational):";
    for (int v : f6_generic_counts) d << " " << v;
    return c.finish(d.str());
}

// ---------------------------------------------------------------------------
// 6. complement-states
// ---------------------------------------------------------------------------

ClaimResult claim_complement_states(const std::vector<std::uint64_t>& seeds) {
    Check c("complement-states",
            "Rank-8 and rank-9 complement states are PPT yet range-entangled");

    // Seven-row subsets: drop the first row of these instantiations.
    const std::array<const char*, 6> seven_row_sources = {
        "F1", "F2(i2=i3,i4=0)", "F3", "F4", "F5", "F6(i2=i3)"};

    auto check_state = [&](const ProductVectorSet& set, const std::string& label,
                           int want_rank) {
        auto dm = build_complement_state(set);
        c.require(dm.rho.trace() == GaussRat(1), label + ": trace differs from 1");
        auto cert = certify(set);
        c.require(cert.orthogonal, label + ": rows not orthogonal");
        c.require(cert.rank == want_rank,
                  label + ": rank " + std::to_string(cert.rank) + ", expected " +
                      std::to_string(want_rank));
        c.require(cert.ppt_all_cuts, label + ": some partial transpose is not PSD");
        for (const auto& range : cert.ranges) {
            c.require(range.entangled,
                      label + ": range under " + range.split.str() +
                          " spans rank " + std::to_string(range.span_rank) +
                          " > threshold " + std::to_string(range.threshold));
        }
        c.require(cert.bound_entangled, label + ": certificate not conclusive");
        c.require(cert.verdict == "bound entangled",
                  label + ": verdict '" + cert.verdict + "'");
    };

    for (auto seed : seeds) {
        for (const char* family : kFamilies) {
            auto set = instantiate(catalog_by_name(family), seed).set;
            check_state(set, tag(family, seed) + " full-set complement", 8);
        }
        for (const char* source : seven_row_sources) {
            auto seven = drop_row(instantiate(catalog_by_name(source), seed).set, 1);
            check_state(seven, tag(source, seed) + " seven-row complement", 9);
        }
    }

    std::ostringstream d;
    d << 12 * seeds.size() << " states (" << seeds.size()
      << " seeds x 6 rank-8 + 6 rank-9 complements): trace 1, PSD across all 7 "
      << "partial transposes, product span within threshold under the finest, "
      << "2x2x4 and 4x4 groupings";
    return c.finish(d.str());
}

// ---------------------------------------------------------------------------
// 7. almost-ge
// ---------------------------------------------------------------------------

ClaimResult claim_almost_ge(const std::vector<std::uint64_t>& seeds) {
    Check c("almost-ge",
            "F6 is unextendible across every 4x4 cut; every 2x8 cut has a witness");
    for (auto seed : seeds) {
        auto set = instantiate(catalog_by_name("F6"), seed).set;
        auto verdict = ge_check(set);
        std::string t = tag("F6", seed);
        c.require(verdict.orthogonal, t + ": not orthogonal");
        c.require(!verdict.ge, t + ": reported unextendible across all cuts");
        c.require(verdict.almost_ge, t + ": some 4x4 cut is extendible");
        c.require(verdict.unextendible_count == 3,
                  t + ": expected exactly the three 4x4 cuts unextendible, got " +
                      std::to_string(verdict.unextendible_count));
        for (const auto& sv : verdict.splits) {
            bool two_by_n = false;
            for (const auto& party : sv.split.parties) two_by_n |= party.size() == 1;
            std::string st = t + " cut " + sv.split.str();
            if (two_by_n) {
                c.require(sv.kind == SplitVerdict::Kind::TwoByNAutoFail,
                          st + ": 2x8 cut not settled constructively");
                c.require(sv.witness.has_value(), st + ": missing witness");
                if (sv.witness) {
                    c.require(witness_kills_all_rows(group(set, sv.split), *sv.witness),
                              st + ": witness fails verification");
                }
            } else {
                c.require(sv.kind == SplitVerdict::Kind::Unextendible,
                          st + ": 4x4 cut is extendible");
            }
        }
    }
    std::ostringstream d;
    d << "F6 over " << seeds.size() << " seeds: AB:CD, AC:BD, AD:BC unextendible; "
      << "all four 2x8 cuts extendible with verified witnesses";
    return c.finish(d.str());
}

// ---------------------------------------------------------------------------
// 8. shifts3
// ---------------------------------------------------------------------------

ClaimResult claim_shifts3(const std::vector<std::uint64_t>& seeds) {
    Check c("shifts3",
            "The 3-qubit set is a finest-split UPB yet extends across A:BC");
    for (auto seed : seeds) {
        auto set = instantiate(catalog_by_name("SHIFTS3"), seed).set;
        std::string t = tag("SHIFTS3", seed);
        c.require(!check_orthogonality(set).has_value(), t + ": not orthogonal");
        c.require(is_upb(set, PartySplit::abc()), t + ": extendible at the finest split");

        auto grouped = group(set, PartySplit::a_bc());
        auto witness = find_extension(grouped);
        c.require(witness.has_value(), t + ": no A:BC extension found");
        if (witness) {
            c.require(witness_kills_all_rows(grouped, *witness),
                      t + ": A:BC witness fails verification");
        }

        // Rotating the qubit labels must preserve both findings, and a full
        // cycle must reproduce the set.
        c.require(is_upb(cyclic_relabel(set, 1), PartySplit::abc()),
                  t + ": rotated copy is extendible at the finest split");
        c.require(cyclic_relabel(set, 3).rows == set.rows,
                  t + ": full rotation does not reproduce the set");
    }
    std::ostringstream d;
    d << "SHIFTS3 over " << seeds.size() << " seeds: finest-split unextendible, "
      << "A:BC extension witness verified, label-rotation invariant";
    return c.finish(d.str());
}

// ---------------------------------------------------------------------------
// 9. tensor-square
// ---------------------------------------------------------------------------

ClaimResult claim_tensor_square(const std::vector<std::uint64_t>& seeds) {
    Check c("tensor-square",
            "The tensor square of the 3-qubit set is unextendible under the "
            "paired tripartite grouping");
    std::uint64_t s0 = seeds.empty() ? 1 : seeds.front();
    auto left = instantiate(catalog_by_name("SHIFTS3"), s0);
    auto right = instantiate(catalog_by_name("SHIFTS3"), s0 + 1);
    auto square = tensor_sets(left.set, right.set);

    c.require(square.size() == 16,
              "expected 16 rows, got " + std::to_string(square.size()));
    c.require(square.n_qubits == 6,
              "expected 6 qubits, got " + std::to_string(square.n_qubits));
    auto bad = check_orthogonality(square);
    c.require(!bad.has_value(), "tensor square is not orthogonal");

    auto split = tensor_split(PartySplit::abc(), PartySplit::abc());
    bool shape_ok = split.party_count() == 3;
    for (int p = 0; shape_ok && p < split.party_count(); ++p)
        shape_ok = split.dim(p) == 4;
    c.require(shape_ok, "paired grouping is not 4x4x4: " + split.str());
    c.require(is_upb(square, split),
              "tensor square is extendible under " + split.str());

    std::ostringstream d;
    d << "16 orthogonal rows on 6 qubits (seeds " << s0 << "," << (s0 + 1)
      << "); the 3^16 assignment tree exhausted with rank pruning under "
      << split.str();
    return c.finish(d.str());
}

// ---------------------------------------------------------------------------
// 10. onumbers-maxsum
// ---------------------------------------------------------------------------

ClaimResult claim_onumbers_maxsum(const std::vector<std::uint64_t>& seeds) {
    Check c("onumbers-maxsum",
            "Pair-count bound, closed-form maximiser, and predicate soundness");

    // Closed form vs brute-force oracle over its whole domain.
    int agreements = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int p = 2 * n; p <= 24; ++p) {
            auto ms = maxsum(p, n);
            long long oracle = maxsum_oracle(p, n);
            ++agreements;
            c.require(ms.value == oracle,
                      "maxsum(" + std::to_string(p) + "," + std::to_string(n) +
                          ") = " + std::to_string(ms.value) + " but oracle says " +
                          std::to_string(oracle));
        }
    }
    c.require(maxsum(8, 2).value == 10, "maxsum(8,2) != 10");
    c.require(maxsum(8, 3).value == 6, "maxsum(8,3) != 6");
    c.require(maxsum(8, 4).value == 4, "maxsum(8,4) != 4");
    c.require(maxsum(10, 2).value == 17, "maxsum(10,2) != 17");
    auto m81 = maxsum(8, 1);
    c.require(m81.value == 16 && m81.extremal == std::vector<int>({4, 4}),
              "maxsum(8,1) != 16 with parts (4,4)");

    // Pair-count bound plus predicate/no-fire cross-check on every family.
    for (const char* family : kFamilies) {
        for (auto seed : seeds) {
            auto set = instantiate(catalog_by_name(family), seed).set;
            auto bc = bound_check(set);
            std::string t = tag(family, seed);
            c.require(bc.threshold == 28, t + ": threshold is not 28");
            c.require(bc.holds, t + ": pair-count sum " + std::to_string(bc.sum) +
                                    " below 28");
            auto fired = exclusion_predicates(set);
            c.require(fired.empty(),
                      t + ": predicate '" +
                          (fired.empty() ? "" : fired.front().name) +
                          "' fired on a 4x4-unextendible set");
            c.require(is_upb(set, PartySplit::ab_cd()),
                      t + ": extendible under AB:CD");
        }
    }

    // Soundness fuzz: on random orthogonal sets, a fired predicate must
    // always co-occur with an AB:CD extension witness.
    int fired_sets = 0;
    for (std::uint64_t fuzz_seed = 1; fuzz_seed <= 500; ++fuzz_seed) {
        auto set = gen_random_orthogonal(fuzz_seed);
        auto fired = exclusion_predicates(set);
        if (fired.empty()) continue;
        ++fired_sets;
        auto grouped = group(set, PartySplit::ab_cd());
        auto witness = find_extension(grouped);
        bool ok = witness.has_value() && witness_kills_all_rows(grouped, *witness);
        c.require(ok, "fuzz seed " + std::to_string(fuzz_seed) + ": predicate '" +
                          fired.front().name +
                          "' fired but no AB:CD extension witness was found");
    }
    c.require(fired_sets > 0, "fuzz never fired a predicate; soundness untested");

    std::ostringstream d;
    d << "closed form == oracle on " << agreements << " (p,n) points; pair-count "
      << "sum >= 28 on every instantiation; predicates fired on " << fired_sets
      << "/500 random sets, each firing matched by a verified AB:CD extension";
    return c.finish(d.str());
}

// ---------------------------------------------------------------------------
// 11. negative-controls
// ---------------------------------------------------------------------------

ClaimResult claim_negative_controls(const std::vector<std::uint64_t>& seeds) {
    Check c("negative-controls",
            "Forcing any single forbidden equality in F1 is caught");
    const UomSpec& f1 = catalog_by_name("F1");

    int atoms = 0, by_orthogonality = 0, by_extension = 0, by_coincidence = 0;
    for (const auto& con : f1.constraints) {
        for (const auto& item : con.forbidden) {
            ++atoms;
            std::string vname = con.subject + "=" + item.str();
            UomSpec broken = force_equal(f1, con.subject, item, "F1(" + vname + ")");

            bool caught = false;
            // Two symbolically identical rows can never be orthogonal.
            for (size_t r = 0; !caught && r < broken.grid.size(); ++r)
                for (size_t s = r + 1; !caught && s < broken.grid.size(); ++s)
                    if (broken.grid[r] == broken.grid[s]) {
                        caught = true;
                        ++by_coincidence;
                    }

            for (auto seed : seeds) {
                if (caught) break;
                InstantiatedSet inst;
                try {
                    inst = instantiate(broken, seed);
                } catch (const ConstraintUnsatisfiable&) {
                    continue;
                }
                if (check_orthogonality(inst.set).has_value()) {
                    caught = true;
                    ++by_orthogonality;
                    break;
                }
                // The family is claimed unextendible under three groupings;
                // a verified witness under any of them convicts the forcing.
                for (const auto& split : {PartySplit::fourqubit(),
                                          PartySplit::a_b_cd(),
                                          PartySplit::ab_cd()}) {
                    auto grouped = group(inst.set, split);
                    auto witness = find_extension(grouped);
                    if (witness && witness_kills_all_rows(grouped, *witness)) {
                        caught = true;
                        ++by_extension;
                        break;
                    }
                }
                if (caught) break;
            }
            c.require(caught, "forcing " + vname + " went uncaught for every seed");
        }
    }
    c.require(atoms == 11,
              "constraint atom census changed: expected 11, found " +
                  std::to_string(atoms));

    std::ostringstream d;
    d << atoms << " forced-equality variants of F1, every one caught ("
      << by_orthogonality << " by an orthogonality failure, " << by_extension
      << " by an extension witness under some claimed grouping, " << by_coincidence
      << " by a symbolic row coincidence)";
    return c.finish(d.str());
}

} // namespace

std::vector<std::string> claim_slugs() {
    return {"orthogonality",  "upb-three-splits", "table1",
            "inequivalence",  "solution-counts",  "complement-states",
            "almost-ge",      "shifts3",          "tensor-square",
            "onumbers-maxsum", "negative-controls"};
}

std::vector<std::uint64_t> default_seeds() {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= 20; ++s) seeds.push_back(s);
    return seeds;
}

std::vector<ClaimResult> run_claims(const std::vector<std::uint64_t>& seeds,
                                    const std::string& only) {
    std::vector<ClaimResult> out;
    auto wanted = [&](const char* slug) { return only == "all" || only == slug; };
    auto guarded = [&](const char* slug, auto&& fn) {
        if (!wanted(slug)) return;
        try {
            out.push_back(fn());
        } catch (const Error& e) {
            ClaimResult r;
            r.slug = slug;
            r.title = "(aborted)";
            r.pass = false;
            r.detail = "aborted by an exception";
            r.failures = {e.what()};
            out.push_back(r);
        }
    };

    guarded("orthogonality", [&] { return claim_orthogonality(seeds); });
    guarded("upb-three-splits", [&] { return claim_upb_three_splits(seeds); });
    guarded("table1", [&] { return claim_table1(); });
    guarded("inequivalence", [&] { return claim_inequivalence(); });
    guarded("solution-counts", [&] { return claim_solution_counts(seeds); });
    guarded("complement-states", [&] { return claim_complement_states(seeds); });
    guarded("almost-ge", [&] { return claim_almost_ge(seeds); });
    guarded("shifts3", [&] { return claim_shifts3(seeds); });
    guarded("tensor-square", [&] { return claim_tensor_square(seeds); });
    guarded("onumbers-maxsum", [&] { return claim_onumbers_maxsum(seeds); });
    guarded("negative-controls", [&] { return claim_negative_controls(seeds); });
    return out;
}

} // namespace upb
