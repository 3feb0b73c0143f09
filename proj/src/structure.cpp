#include "upb/structure.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>

#include "upb/unextend.hpp"

namespace upb {

// ---------------------------------------------------------------------------
// Orthogonality multiplicities
// ---------------------------------------------------------------------------

namespace {

struct StateClass {
    ProjQubit state;
    std::vector<int> rows;
};

// Distinct states of one column with their rows, first-appearance order.
std::vector<StateClass> column_census(const ProductVectorSet& set, int q) {
    std::vector<StateClass> census;
    for (int r = 0; r < set.size(); ++r) {
        const ProjQubit& s = set.at(r, q);
        bool found = false;
        for (auto& entry : census)
            if (entry.state == s) {
                entry.rows.push_back(r);
                found = true;
                break;
            }
        if (!found) census.push_back({s, {r}});
    }
    return census;
}

} // namespace

std::vector<ColumnProfile> o_numbers(const ProductVectorSet& set) {
    std::vector<ColumnProfile> profiles;
    for (int q = 0; q < set.n_qubits; ++q) {
        ColumnProfile profile;
        profile.column = q;
        auto census = column_census(set, q);
        for (const auto& entry : census)
            profile.multiplicities.emplace_back(entry.state, int(entry.rows.size()));
        for (size_t i = 0; i < census.size(); ++i) {
            ProjQubit partner = census[i].state.orthogonal();
            for (size_t j = i + 1; j < census.size(); ++j)
                if (census[j].state == partner)
                    profile.o_number +=
                        (long long)(census[i].rows.size()) * (long long)(census[j].rows.size());
        }
        profiles.push_back(std::move(profile));
    }
    return profiles;
}

BoundCheck bound_check(const ProductVectorSet& set) {
    BoundCheck check;
    for (const auto& profile : o_numbers(set)) {
        check.p.push_back(profile.o_number);
        check.sum += profile.o_number;
    }
    const long long m = set.size();
    check.threshold = m * (m - 1) / 2;
    check.holds = check.sum >= check.threshold;
    return check;
}

// ---------------------------------------------------------------------------
// Extremal partitions
// ---------------------------------------------------------------------------

MaxsumResult maxsum(int p, int n) {
    if (n < 1 || p < 2 * n) throw BadArity("maxsum: need p >= 2n >= 2");
    MaxsumResult result;
    result.p = p;
    result.n = n;
    const long long q = p - 2 * n + 2;
    const long long hi = (q + 1) / 2, lo = q / 2;
    result.value = hi * lo + (n - 1);
    result.extremal.push_back(int(hi));
    result.extremal.push_back(int(lo));
    for (int i = 2; i < 2 * n; ++i) result.extremal.push_back(1);
    return result;
}

long long maxsum_oracle(int p, int n) {
    if (n < 1 || p < 2 * n) throw BadArity("maxsum_oracle: need p >= 2n >= 2");
    if (p > 24 || n > 6) throw SetTooLarge("maxsum_oracle: capped at p <= 24, n <= 6");
    // Exhaust all compositions of p into 2n positive parts a_1..a_{2n},
    // scoring a_1*a_2 + a_3*a_4 + ... pairwise.
    long long best = -1;
    std::vector<int> parts(size_t(2 * n));
    std::function<void(int, int)> walk = [&](int index, int remaining) {
        const int slots = 2 * n - index;
        if (slots == 0) {
            if (remaining != 0) return;
            long long score = 0;
            for (int i = 0; i < 2 * n; i += 2)
                score += (long long)parts[size_t(i)] * parts[size_t(i + 1)];
            best = std::max(best, score);
            return;
        }
        for (int a = 1; a + (slots - 1) <= remaining; ++a) {
            parts[size_t(index)] = a;
            walk(index + 1, remaining - a);
        }
    };
    walk(0, p);
    return best;
}

// ---------------------------------------------------------------------------
// Exclusion predicates
// ---------------------------------------------------------------------------

namespace {

std::string row_list(const std::vector<int>& rows) {
    std::string out;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(rows[i] + 1);
    }
    return out;
}

char qubit_letter(int q) { return char('A' + q); }

bool eq_at(const ProductVectorSet& set, int r, int s, int q) {
    return set.at(r, q) == set.at(s, q);
}

bool orth_at(const ProductVectorSet& set, int r, int s, int q) {
    return inner2(set.at(r, q), set.at(s, q)).is_zero();
}

} // namespace

std::vector<FiredCondition> exclusion_predicates(const ProductVectorSet& set) {
    if (set.n_qubits != 4 || set.size() != 8)
        throw WrongShape("exclusion_predicates: expects 8 rows of 4 qubits");
    const int m = set.size();
    std::vector<FiredCondition> fired;
    std::vector<std::vector<StateClass>> census;
    for (int q = 0; q < 4; ++q) census.push_back(column_census(set, q));

    // The two parties of the AB:CD coarse-graining, and each qubit's partner
    // inside its party.
    const std::array<std::array<int, 2>, 2> parties{{{0, 1}, {2, 3}}};
    auto partner = [](int q) { return q ^ 1; };
    auto other_party = [&](int q) { return parties[q < 2 ? 1 : 0]; };

    // Some qubit carries the same state on >= 4 rows.
    for (int q = 0; q < 4; ++q)
        for (const auto& cls : census[size_t(q)])
            if (int(cls.rows.size()) >= 4) {
                fired.push_back({"four-identical-on-one-qubit",
                                 std::string("qubit ") + qubit_letter(q) + ", rows " +
                                     row_list(cls.rows)});
                goto next1;
            }
next1:;

    // Three rows identical on both qubits of one party.
    for (const auto& party : parties)
        for (int r = 0; r < m; ++r)
            for (int s = r + 1; s < m; ++s)
                for (int t = s + 1; t < m; ++t)
                    if (eq_at(set, r, s, party[0]) && eq_at(set, r, t, party[0]) &&
                        eq_at(set, r, s, party[1]) && eq_at(set, r, t, party[1])) {
                        fired.push_back({"three-rows-equal-on-a-party",
                                         std::string("party ") + qubit_letter(party[0]) +
                                             qubit_letter(party[1]) + ", rows " +
                                             row_list({r, s, t})});
                        goto next2;
                    }
next2:;

    // A triple on one qubit of a party plus a disjoint pair on the other
    // qubit of the same party (five distinct rows).
    for (const auto& party : parties)
        for (int flip = 0; flip < 2; ++flip) {
            const int x = party[flip], y = party[1 - flip];
            for (const auto& cx : census[size_t(x)]) {
                if (int(cx.rows.size()) < 3) continue;
                for (const auto& cy : census[size_t(y)]) {
                    if (int(cy.rows.size()) < 2) continue;
                    // A 3-subset of the x-class and a disjoint 2-subset of
                    // the y-class exist iff the union holds >= 5 rows.
                    std::vector<int> uni = cx.rows;
                    for (int r : cy.rows)
                        if (std::find(uni.begin(), uni.end(), r) == uni.end()) uni.push_back(r);
                    if (int(uni.size()) >= 5) {
                        fired.push_back({"triple-and-disjoint-pair-in-a-party",
                                         std::string("triple on ") + qubit_letter(x) + " rows " +
                                             row_list(cx.rows) + "; pair on " + qubit_letter(y) +
                                             " rows " + row_list(cy.rows)});
                        goto next3;
                    }
                }
            }
        }
next3:;

    // Both qubits of one party carry a state of multiplicity >= 3.
    for (const auto& party : parties) {
        bool triple[2] = {false, false};
        for (int side = 0; side < 2; ++side)
            for (const auto& cls : census[size_t(party[side])])
                triple[side] |= int(cls.rows.size()) >= 3;
        if (triple[0] && triple[1]) {
            fired.push_back({"triples-on-both-qubits-of-a-party",
                             std::string("party ") + qubit_letter(party[0]) +
                                 qubit_letter(party[1])});
            break;
        }
    }

    // Three rows identical on one qubit of each party (same three rows).
    for (int x : parties[0])
        for (int y : parties[1])
            for (int r = 0; r < m; ++r)
                for (int s = r + 1; s < m; ++s)
                    for (int t = s + 1; t < m; ++t)
                        if (eq_at(set, r, s, x) && eq_at(set, r, t, x) && eq_at(set, r, s, y) &&
                            eq_at(set, r, t, y)) {
                            fired.push_back({"three-rows-equal-across-parties",
                                             std::string("qubits ") + qubit_letter(x) + "," +
                                                 qubit_letter(y) + ", rows " +
                                                 row_list({r, s, t})});
                            goto next5;
                        }
next5:;

    // A triple on qubit x, two of whose rows also agree on x's partner and
    // on one qubit of the other party.
    for (int x = 0; x < 4; ++x) {
        for (const auto& cls : census[size_t(x)]) {
            if (int(cls.rows.size()) < 3) continue;
            for (size_t a = 0; a < cls.rows.size(); ++a)
                for (size_t b = a + 1; b < cls.rows.size(); ++b) {
                    const int u = cls.rows[a], v = cls.rows[b];
                    if (!eq_at(set, u, v, partner(x))) continue;
                    for (int y : other_party(x))
                        if (eq_at(set, u, v, y)) {
                            fired.push_back(
                                {"triple-with-aligned-pairs",
                                 std::string("triple on ") + qubit_letter(x) + " rows " +
                                     row_list(cls.rows) + "; rows " + row_list({u, v}) +
                                     " agree on " + qubit_letter(partner(x)) + " and " +
                                     qubit_letter(y)});
                            goto next6;
                        }
                }
        }
    }
next6:;

    // Two rows equal on both qubits of one party, lying inside a triple on a
    // qubit of the other party.
    for (const auto& party : parties)
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v) {
                if (!eq_at(set, u, v, party[0]) || !eq_at(set, u, v, party[1])) continue;
                for (int y : other_party(party[0]))
                    if (eq_at(set, u, v, y))
                        for (int w = 0; w < m; ++w)
                            if (w != u && w != v && eq_at(set, u, w, y)) {
                                fired.push_back(
                                    {"party-pair-inside-cross-triple",
                                     std::string("rows ") + row_list({u, v}) + " equal on party " +
                                         qubit_letter(party[0]) + qubit_letter(party[1]) +
                                         ", triple on " + qubit_letter(y) + " with row " +
                                         std::to_string(w + 1)});
                                goto next7;
                            }
            }
next7:;

    // Two rows equal on both qubits of one party and on a third qubit.
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            for (const auto& party : parties)
                if (eq_at(set, u, v, party[0]) && eq_at(set, u, v, party[1]))
                    for (int y : other_party(party[0]))
                        if (eq_at(set, u, v, y)) {
                            fired.push_back({"two-rows-equal-on-three-qubits",
                                             std::string("rows ") + row_list({u, v}) +
                                                 ", qubits " + qubit_letter(party[0]) +
                                                 qubit_letter(party[1]) + qubit_letter(y)});
                            goto next8;
                        }
next8:;

    // Two rows equal on both qubits of one party and orthogonal on both
    // qubits of the other.
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            for (int side = 0; side < 2; ++side) {
                const auto& pe = parties[side];
                const auto& po = parties[1 - side];
                if (eq_at(set, u, v, pe[0]) && eq_at(set, u, v, pe[1]) &&
                    orth_at(set, u, v, po[0]) && orth_at(set, u, v, po[1])) {
                    fired.push_back({"party-equal-party-orthogonal-pair",
                                     std::string("rows ") + row_list({u, v}) + ", equal on " +
                                         qubit_letter(pe[0]) + qubit_letter(pe[1]) +
                                         ", orthogonal on " + qubit_letter(po[0]) +
                                         qubit_letter(po[1])});
                    goto next9;
                }
            }
next9:;

    // Two rows equal on both qubits of one party.
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            for (const auto& party : parties)
                if (eq_at(set, u, v, party[0]) && eq_at(set, u, v, party[1])) {
                    fired.push_back({"two-rows-equal-on-a-party",
                                     std::string("rows ") + row_list({u, v}) + ", party " +
                                         qubit_letter(party[0]) + qubit_letter(party[1])});
                    goto next10;
                }
next10:;

    return fired;
}

// ---------------------------------------------------------------------------
// Classification witnesses
// ---------------------------------------------------------------------------

namespace {

// Same orthogonality class: equal or orthogonal single-qubit states.
bool same_class(const ProductVectorSet& set, int r, int s, int q) {
    return eq_at(set, r, s, q) || orth_at(set, r, s, q);
}

// All row triples pairwise in one class on qubit q.
std::vector<std::vector<int>> class_triples(const ProductVectorSet& set, int q) {
    std::vector<std::vector<int>> triples;
    const int m = set.size();
    for (int r = 0; r < m; ++r)
        for (int s = r + 1; s < m; ++s)
            for (int t = s + 1; t < m; ++t)
                if (same_class(set, r, s, q) && same_class(set, r, t, q) &&
                    same_class(set, s, t, q))
                    triples.push_back({r, s, t});
    return triples;
}

} // namespace

std::vector<ClassificationWitness> classification_witnesses(std::uint64_t seed) {
    std::vector<ProductVectorSet> sets;
    std::vector<std::string> names = {"F1", "F2", "F3", "F4", "F5", "F6"};
    for (const auto& name : names)
        sets.push_back(instantiate(catalog_by_name(name), seed).set);
    auto family = [&](const std::string& name) -> const ProductVectorSet& {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return sets[i];
        throw UnknownVariable("classification_witnesses: " + name);
    };

    std::vector<ClassificationWitness> report;

    // Row pair equal on qubits A and C, orthogonal on B and D.
    {
        ClassificationWitness w;
        w.clause = "eq-orth-eq-orth-row-pair";
        w.families = {"F1"};
        w.present = true;
        for (const auto& name : w.families) {
            const auto& set = family(name);
            bool found = false;
            for (int u = 0; u < set.size() && !found; ++u)
                for (int v = u + 1; v < set.size() && !found; ++v)
                    if (eq_at(set, u, v, 0) && orth_at(set, u, v, 1) && eq_at(set, u, v, 2) &&
                        orth_at(set, u, v, 3)) {
                        found = true;
                        w.detail += name + ": rows " + row_list({u, v}) + "; ";
                    }
            w.present &= found;
        }
        report.push_back(w);
    }

    // Row pair equal on qubits A and C.
    {
        ClassificationWitness w;
        w.clause = "row-pair-equal-on-first-and-third-qubit";
        w.families = {"F2", "F3", "F4", "F5"};
        w.present = true;
        for (const auto& name : w.families) {
            const auto& set = family(name);
            bool found = false;
            for (int u = 0; u < set.size() && !found; ++u)
                for (int v = u + 1; v < set.size() && !found; ++v)
                    if (eq_at(set, u, v, 0) && eq_at(set, u, v, 2)) {
                        found = true;
                        w.detail += name + ": rows " + row_list({u, v}) + "; ";
                    }
            w.present &= found;
        }
        report.push_back(w);
    }

    // Five distinct rows: a class triple on qubit A and a class triple on
    // qubit C overlapping in exactly one row.
    {
        ClassificationWitness w;
        w.clause = "overlapping-class-triples-first-and-third-qubit";
        w.families = {"F2", "F3", "F4", "F5"};
        w.present = true;
        for (const auto& name : w.families) {
            const auto& set = family(name);
            bool found = false;
            auto ta = class_triples(set, 0);
            auto tc = class_triples(set, 2);
            for (const auto& t1 : ta) {
                for (const auto& t3 : tc) {
                    int shared = 0;
                    for (int r : t1)
                        if (std::find(t3.begin(), t3.end(), r) != t3.end()) ++shared;
                    if (shared == 1) {
                        found = true;
                        w.detail += name + ": rows " + row_list(t1) + " / " + row_list(t3) + "; ";
                        break;
                    }
                }
                if (found) break;
            }
            w.present &= found;
        }
        report.push_back(w);
    }

    // A class triple in some column.
    {
        ClassificationWitness w;
        w.clause = "class-triple-in-some-column";
        w.families = {"F2", "F3", "F4", "F5"};
        w.present = true;
        for (const auto& name : w.families) {
            const auto& set = family(name);
            bool found = false;
            for (int q = 0; q < set.n_qubits && !found; ++q) {
                auto triples = class_triples(set, q);
                if (!triples.empty()) {
                    found = true;
                    w.detail += name + ": qubit " + std::string(1, qubit_letter(q)) + " rows " +
                                row_list(triples[0]) + "; ";
                }
            }
            w.present &= found;
        }
        report.push_back(w);
    }

    // A repeated state in the first column.
    {
        ClassificationWitness w;
        w.clause = "repeated-state-in-first-column";
        w.families = {"F2", "F3", "F4", "F5", "F6"};
        w.present = true;
        for (const auto& name : w.families) {
            const auto& set = family(name);
            bool found = false;
            for (int u = 0; u < set.size() && !found; ++u)
                for (int v = u + 1; v < set.size() && !found; ++v)
                    if (eq_at(set, u, v, 0)) {
                        found = true;
                        w.detail += name + ": rows " + row_list({u, v}) + "; ";
                    }
            w.present &= found;
        }
        report.push_back(w);
    }

    return report;
}

// ---------------------------------------------------------------------------
// Fuzzing
// ---------------------------------------------------------------------------

ProductVectorSet gen_random_orthogonal(std::uint64_t seed, int rows, int cols) {
    if (rows < 1 || cols < 1 || rows > (1 << cols))
        throw SetTooLarge("gen_random_orthogonal: needs rows <= 2^cols");
    std::mt19937_64 rng(seed);
    auto rand_state = [&]() -> ProjQubit {
        const long pick = long(rng() % 8);
        if (pick == 0) return ProjQubit::zero();
        if (pick == 1) return ProjQubit::one();
        const long a = long(rng() % 7) - 3;
        const long d = 1 + long(rng() % 2);
        const long b = long(rng() % 5) - 2;
        GaussRat c(make_rat(a, d), make_rat(b, 1));
        return ProjQubit::finite(c);
    };

    std::vector<std::vector<ProjQubit>> grid(
        static_cast<size_t>(rows), std::vector<ProjQubit>(static_cast<size_t>(cols)));
    std::vector<std::vector<bool>> fixed(size_t(rows), std::vector<bool>(size_t(cols), false));

    // Recursively split the row group along an unused column with an
    // orthogonal state pair; rows parted at a node are orthogonal there, and
    // recursion parts every pair somewhere.
    std::function<void(std::vector<int>, std::vector<int>)> split =
        [&](std::vector<int> group, std::vector<int> avail) {
            if (int(group.size()) <= 1) return;
            // Fisher-Yates with the pinned generator.
            for (size_t i = group.size() - 1; i > 0; --i)
                std::swap(group[i], group[size_t(rng() % (i + 1))]);
            const size_t pick = size_t(rng() % avail.size());
            const int c = avail[pick];
            avail.erase(avail.begin() + long(pick));
            const int cap = 1 << avail.size();
            const int g = int(group.size());
            const int lo = std::max(1, g - cap), hi = std::min(g - 1, cap);
            const int a = lo + int(rng() % std::uint64_t(hi - lo + 1));
            ProjQubit s = rand_state();
            ProjQubit t = s.orthogonal();
            for (int i = 0; i < g; ++i) {
                grid[size_t(group[size_t(i)])][size_t(c)] = i < a ? s : t;
                fixed[size_t(group[size_t(i)])][size_t(c)] = true;
            }
            split(std::vector<int>(group.begin(), group.begin() + a), avail);
            split(std::vector<int>(group.begin() + a, group.end()), avail);
        };
    std::vector<int> all_rows, all_cols;
    for (int r = 0; r < rows; ++r) all_rows.push_back(r);
    for (int c = 0; c < cols; ++c) all_cols.push_back(c);
    split(all_rows, all_cols);

    // Fill the unconstrained cells, reusing existing column states half the
    // time so that multiplicity patterns actually occur.
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) {
            if (fixed[size_t(r)][size_t(c)]) continue;
            std::vector<ProjQubit> palette;
            for (int i = 0; i < rows; ++i)
                if (i != r && (fixed[size_t(i)][size_t(c)] || i < r))
                    palette.push_back(grid[size_t(i)][size_t(c)]);
            if (!palette.empty() && rng() % 2 == 0)
                grid[size_t(r)][size_t(c)] = palette[size_t(rng() % palette.size())];
            else
                grid[size_t(r)][size_t(c)] = rand_state();
            fixed[size_t(r)][size_t(c)] = true;
        }

    ProductVectorSet set;
    set.name = "random(" + std::to_string(seed) + ")";
    set.n_qubits = cols;
    set.rows = std::move(grid);
    if (check_orthogonality(set))
        throw Error("gen_random_orthogonal: construction lost orthogonality");
    set.validate();
    return set;
}

} // namespace upb
