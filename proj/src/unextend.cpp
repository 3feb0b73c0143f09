#include "upb/unextend.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace upb {

// ---------------------------------------------------------------------------
// Grouping
// ---------------------------------------------------------------------------

GroupedSet group(const ProductVectorSet& set, const PartySplit& split) {
    if (split.n_qubits != set.n_qubits)
        throw WrongShape("group: split is for a different qubit count");
    GroupedSet g;
    g.split = split;
    for (int r = 0; r < set.size(); ++r) {
        std::vector<CMatrix> parts;
        for (const auto& party : split.parties) {
            CMatrix v = set.at(r, party[0]).vec();
            for (size_t k = 1; k < party.size(); ++k)
                v = kron(v, set.at(r, party[k]).vec());
            parts.push_back(std::move(v));
        }
        g.party_vectors.push_back(std::move(parts));
    }
    return g;
}

std::optional<std::pair<int, int>> check_orthogonality(const ProductVectorSet& set) {
    for (int i = 0; i < set.size(); ++i)
        for (int j = i + 1; j < set.size(); ++j) {
            GaussRat prod(1);
            for (int q = 0; q < set.n_qubits; ++q) {
                prod *= inner2(set.at(i, q), set.at(j, q));
                if (prod.is_zero()) break;
            }
            if (!prod.is_zero()) return std::make_pair(i, j);
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fraction-free echelon forms over the Gaussian integers
// ---------------------------------------------------------------------------

namespace {

// Divide a vector by the gcd of all its integer parts to curb entry growth.
void remove_content(std::vector<GaussInt>& v) {
    mpz_class g(0);
    for (const auto& z : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.re.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.im.get_mpz_t());
    }
    if (g == 0 || g == 1) return;
    for (auto& z : v) {
        mpz_divexact(z.re.get_mpz_t(), z.re.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(z.im.get_mpz_t(), z.im.get_mpz_t(), g.get_mpz_t());
    }
}

// The orthogonality condition <w, v> = 0 is linear in w with coefficient row
// conj(v); scale that row to a primitive Gaussian-integer vector.
std::vector<GaussInt> constraint_row(const CMatrix& v) {
    mpz_class s(1);
    for (int i = 0; i < v.rows(); ++i) {
        const GaussRat& z = v.at(i, 0);
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), s.get_mpz_t(), z.re.get_den().get_mpz_t());
        mpz_lcm(s.get_mpz_t(), l.get_mpz_t(), z.im.get_den().get_mpz_t());
    }
    std::vector<GaussInt> row(size_t(v.rows()));
    for (int i = 0; i < v.rows(); ++i) {
        const GaussRat& z = v.at(i, 0);
        mpz_class re = z.re.get_num() * (s / z.re.get_den());
        mpz_class im = z.im.get_num() * (s / z.im.get_den());
        row[size_t(i)] = GaussInt(re, mpz_class(-im));  // conjugate
    }
    remove_content(row);
    return row;
}

int lead_pos(const std::vector<GaussInt>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return int(i);
    return -1;
}

// Row space in echelon form; insertions are fraction-free.
struct Echelon {
    int dim = 0;
    std::vector<std::vector<GaussInt>> rows;  // sorted by leading position

    int rank() const { return int(rows.size()); }

    // Insert a vector; returns true iff the rank grew.
    bool insert(std::vector<GaussInt> v) {
        for (size_t k = 0; k < rows.size();) {
            int lv = lead_pos(v);
            if (lv < 0) return false;
            int le = lead_pos(rows[k]);
            if (lv < le) break;
            if (lv > le) { ++k; continue; }
            // Same leading position: eliminate it from v.
            const auto& e = rows[k];
            GaussInt pe = e[size_t(le)], pv = v[size_t(lv)];
            for (size_t i = size_t(lv); i < v.size(); ++i)
                v[i] = pe * v[i] - pv * e[i];
            remove_content(v);
        }
        int lv = lead_pos(v);
        if (lv < 0) return false;
        auto it = rows.begin();
        while (it != rows.end() && lead_pos(*it) < lv) ++it;
        rows.insert(it, std::move(v));
        return true;
    }
};

// Stack the constraint rows of the vectors a party was assigned, as a
// rational matrix ready for nullspace().
CMatrix stacked_constraints(const GroupedSet& g, const std::vector<int>& assignment,
                            int party) {
    std::vector<int> members;
    for (size_t r = 0; r < assignment.size(); ++r)
        if (assignment[r] == party) members.push_back(int(r));
    const int dim = g.split.dim(party);
    CMatrix m(int(members.size()), dim);
    for (size_t i = 0; i < members.size(); ++i) {
        const CMatrix& v = g.party_vectors[size_t(members[i])][size_t(party)];
        for (int c = 0; c < dim; ++c) m.at(int(i), c) = v.at(c, 0).conj();
    }
    return m;
}

void check_grouped_orthogonality(const GroupedSet& g) {
    const int k = g.split.party_count();
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
            GaussRat prod(1);
            for (int p = 0; p < k && !prod.is_zero(); ++p)
                prod *= inner(g.party_vectors[size_t(i)][size_t(p)],
                              g.party_vectors[size_t(j)][size_t(p)]);
            if (!prod.is_zero())
                throw NotOrthogonal("rows " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " are not orthogonal");
        }
}

void check_budget(const GroupedSet& g, const SearchOptions& options) {
    double work = std::pow(double(g.split.party_count()), double(g.size()));
    if (work > options.budget && !options.force)
        throw BudgetExceeded("assignment space " + std::to_string(work) +
                             " exceeds budget; rerun with --force to override");
}

// Visit order for the assignment search.  Short sets keep their natural
// order (and therefore fully reproducible witnesses); long ones are
// reordered greedily so rows that add fresh directions to many parties come
// first, which lets the rank pruning kill branches near the root.
std::vector<int> visit_order(const GroupedSet& g,
                             const std::vector<std::vector<std::vector<GaussInt>>>& rowvecs) {
    const int m = g.size(), k = g.split.party_count();
    std::vector<int> order(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) order[size_t(i)] = i;
    if (m <= 10) return order;

    std::vector<Echelon> ech(static_cast<size_t>(k));
    for (int p = 0; p < k; ++p) ech[size_t(p)].dim = g.split.dim(p);
    std::vector<bool> used(size_t(m), false);
    std::vector<int> out;
    for (int step = 0; step < m; ++step) {
        int best = -1, best_gain = -1;
        for (int r = 0; r < m; ++r) {
            if (used[size_t(r)]) continue;
            int gain = 0;
            for (int p = 0; p < k; ++p) {
                Echelon probe = ech[size_t(p)];
                if (probe.insert(rowvecs[size_t(r)][size_t(p)])) ++gain;
            }
            if (gain > best_gain) { best_gain = gain; best = r; }
        }
        used[size_t(best)] = true;
        out.push_back(best);
        for (int p = 0; p < k; ++p) ech[size_t(p)].insert(rowvecs[size_t(best)][size_t(p)]);
    }
    return out;
}

std::vector<std::vector<std::vector<GaussInt>>> all_constraint_rows(const GroupedSet& g) {
    std::vector<std::vector<std::vector<GaussInt>>> rowvecs;
    for (int r = 0; r < g.size(); ++r) {
        std::vector<std::vector<GaussInt>> per_party;
        for (int p = 0; p < g.split.party_count(); ++p)
            per_party.push_back(constraint_row(g.party_vectors[size_t(r)][size_t(p)]));
        rowvecs.push_back(std::move(per_party));
    }
    return rowvecs;
}

} // namespace

// ---------------------------------------------------------------------------
// Extension search
// ---------------------------------------------------------------------------

std::optional<ExtensionWitness> find_extension(const GroupedSet& grouped,
                                               const SearchOptions& options) {
    check_grouped_orthogonality(grouped);
    check_budget(grouped, options);
    const int m = grouped.size(), k = grouped.split.party_count();

    // Every orthogonal product vector must be orthogonal to each row in at
    // least one party, so it induces a total row -> party assignment; the
    // search over assignments is therefore complete.  A branch dies as soon
    // as a party's assigned constraint rows span its whole space.
    auto rowvecs = all_constraint_rows(grouped);
    std::vector<int> order = visit_order(grouped, rowvecs);
    std::vector<int> assignment(size_t(m), -1);
    std::vector<Echelon> ech(static_cast<size_t>(k));
    for (int p = 0; p < k; ++p) ech[size_t(p)].dim = grouped.split.dim(p);

    auto dfs = [&](auto&& self, int level) -> bool {
        if (level == m) return true;
        const int r = order[size_t(level)];
        for (int p = 0; p < k; ++p) {
            Echelon saved = ech[size_t(p)];
            ech[size_t(p)].insert(rowvecs[size_t(r)][size_t(p)]);
            if (ech[size_t(p)].rank() < ech[size_t(p)].dim) {
                assignment[size_t(r)] = p;
                if (self(self, level + 1)) return true;
            }
            ech[size_t(p)] = std::move(saved);
        }
        assignment[size_t(r)] = -1;
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;

    ExtensionWitness w;
    w.assignment = assignment;
    for (int p = 0; p < k; ++p) {
        auto basis = nullspace(stacked_constraints(grouped, assignment, p));
        if (basis.empty()) throw Error("extension search: empty nullspace (internal)");
        w.party_vectors.push_back(monic(basis[0]));
    }
    // Soundness check: the witness is orthogonal to every row.
    for (int r = 0; r < m; ++r) {
        GaussRat prod(1);
        for (int p = 0; p < k && !prod.is_zero(); ++p)
            prod *= inner(grouped.party_vectors[size_t(r)][size_t(p)], w.party_vectors[size_t(p)]);
        if (!prod.is_zero()) throw Error("extension search: unsound witness (internal)");
    }
    return w;
}

bool is_upb(const ProductVectorSet& set, const PartySplit& split,
            const SearchOptions& options) {
    if (auto bad = check_orthogonality(set))
        throw NotOrthogonal(set.name + ": rows " + std::to_string(bad->first + 1) + " and " +
                            std::to_string(bad->second + 1) + " are not orthogonal");
    return !find_extension(group(set, split), options).has_value();
}

// ---------------------------------------------------------------------------
// Exhaustive census
// ---------------------------------------------------------------------------

bool SolutionFamily::isolated() const {
    for (const auto& basis : party_bases)
        if (basis.size() != 1) return false;
    return true;
}

OrthogonalSolutionSet enumerate_orthogonal(const GroupedSet& grouped,
                                           const SearchOptions& options) {
    check_grouped_orthogonality(grouped);
    check_budget(grouped, options);
    const int m = grouped.size(), k = grouped.split.party_count();

    auto rowvecs = all_constraint_rows(grouped);
    std::vector<int> order = visit_order(grouped, rowvecs);
    std::vector<int> assignment(size_t(m), -1);
    std::vector<Echelon> ech(static_cast<size_t>(k));
    for (int p = 0; p < k; ++p) ech[size_t(p)].dim = grouped.split.dim(p);

    OrthogonalSolutionSet out;
    std::set<std::string> seen_isolated;

    auto leaf = [&]() {
        SolutionFamily fam;
        fam.assignment = assignment;
        for (int p = 0; p < k; ++p) {
            auto basis = nullspace(stacked_constraints(grouped, assignment, p));
            std::vector<CMatrix> canon;
            for (auto& b : basis) canon.push_back(monic(b));
            fam.party_bases.push_back(std::move(canon));
        }
        if (fam.isolated()) {
            // The same product solution shows up under several assignments
            // (it may kill one row in two different parties); canonicalise
            // and deduplicate.
            std::string key;
            for (const auto& basis : fam.party_bases) key += basis[0].str() + "|";
            if (seen_isolated.insert(key).second) {
                out.families.push_back(std::move(fam));
                ++out.isolated_count;
            }
        } else {
            out.finite = false;
            out.families.push_back(std::move(fam));
        }
    };

    auto dfs = [&](auto&& self, int level) -> void {
        if (level == m) { leaf(); return; }
        const int r = order[size_t(level)];
        for (int p = 0; p < k; ++p) {
            Echelon saved = ech[size_t(p)];
            ech[size_t(p)].insert(rowvecs[size_t(r)][size_t(p)]);
            if (ech[size_t(p)].rank() < ech[size_t(p)].dim) {
                assignment[size_t(r)] = p;
                self(self, level + 1);
            }
            ech[size_t(p)] = std::move(saved);
        }
        assignment[size_t(r)] = -1;
    };
    dfs(dfs, 0);
    return out;
}

int solution_span_rank(const GroupedSet& grouped, const OrthogonalSolutionSet& sols) {
    int full_dim = 1;
    for (int p = 0; p < grouped.split.party_count(); ++p) full_dim *= grouped.split.dim(p);

    // Stack every solution vector; infinite families contribute all basis
    // tensor combinations, which span the same space as the family itself
    // (the product map is multilinear in each party slot).
    std::vector<CMatrix> vectors;
    for (const auto& fam : sols.families) {
        std::vector<size_t> idx(fam.party_bases.size(), 0);
        while (true) {
            CMatrix v = fam.party_bases[0][idx[0]];
            for (size_t p = 1; p < fam.party_bases.size(); ++p)
                v = kron(v, fam.party_bases[p][idx[p]]);
            vectors.push_back(std::move(v));
            size_t p = fam.party_bases.size();
            while (p > 0) {
                --p;
                if (++idx[p] < fam.party_bases[p].size()) break;
                idx[p] = 0;
                if (p == 0) goto done_family;
            }
        }
    done_family:;
    }
    if (vectors.empty()) return 0;
    CMatrix stack(int(vectors.size()), full_dim);
    for (size_t i = 0; i < vectors.size(); ++i)
        for (int c = 0; c < full_dim; ++c) stack.at(int(i), c) = vectors[i].at(c, 0);
    return rank(stack);
}

ProductVectorSet drop_row(const ProductVectorSet& set, int row) {
    if (row < 1 || row > set.size())
        throw IndexOutOfRange(set.name + ": no row " + std::to_string(row));
    ProductVectorSet out;
    out.name = set.name + " minus row " + std::to_string(row);
    out.n_qubits = set.n_qubits;
    for (int r = 0; r < set.size(); ++r)
        if (r != row - 1) out.rows.push_back(set.rows[size_t(r)]);
    return out;
}

} // namespace upb
