#include "upb/split.hpp"

#include <algorithm>
#include <sstream>

namespace upb {

PartySplit::PartySplit(std::vector<std::vector<int>> p, int n)
    : parties(std::move(p)), n_qubits(n) {
    std::vector<bool> seen(size_t(n), false);
    int total = 0;
    for (const auto& party : parties) {
        if (party.empty()) throw WrongShape("split: empty party");
        for (int q : party) {
            if (q < 0 || q >= n || seen[size_t(q)])
                throw WrongShape("split: parties must partition the qubits");
            seen[size_t(q)] = true;
            ++total;
        }
    }
    if (total != n) throw WrongShape("split: parties must cover every qubit");
}

std::string PartySplit::str() const {
    std::ostringstream out;
    for (size_t p = 0; p < parties.size(); ++p) {
        if (p) out << ":";
        for (int q : parties[p]) out << char('A' + q);
    }
    return out.str();
}

PartySplit PartySplit::fourqubit() { return PartySplit({{0}, {1}, {2}, {3}}, 4); }
PartySplit PartySplit::ab_cd() { return PartySplit({{0, 1}, {2, 3}}, 4); }
PartySplit PartySplit::ac_bd() { return PartySplit({{0, 2}, {1, 3}}, 4); }
PartySplit PartySplit::ad_bc() { return PartySplit({{0, 3}, {1, 2}}, 4); }
PartySplit PartySplit::a_b_cd() { return PartySplit({{0}, {1}, {2, 3}}, 4); }
PartySplit PartySplit::abc() { return PartySplit({{0}, {1}, {2}}, 3); }
PartySplit PartySplit::a_bc() { return PartySplit({{0}, {1, 2}}, 3); }

PartySplit PartySplit::qubit_vs_rest(int qubit, int n) {
    std::vector<int> rest;
    for (int q = 0; q < n; ++q)
        if (q != qubit) rest.push_back(q);
    return PartySplit({{qubit}, rest}, n);
}

PartySplit PartySplit::parse(const std::string& text, int n_qubits) {
    if (text.empty()) throw WrongShape("split: empty spec");
    std::vector<std::vector<int>> parties;
    std::vector<int> current;
    bool has_colon = text.find(':') != std::string::npos;
    for (char ch : text) {
        if (ch == ':') {
            parties.push_back(current);
            current.clear();
        } else if (ch >= 'A' && ch < 'A' + n_qubits) {
            current.push_back(ch - 'A');
        } else if (ch >= 'a' && ch < 'a' + n_qubits) {
            current.push_back(ch - 'a');
        } else {
            throw WrongShape("split: unknown qubit letter in '" + text + "'");
        }
    }
    parties.push_back(current);
    if (!has_colon) {
        // "ABCD" with no separator names the finest split.
        parties.clear();
        for (char ch : text) {
            int q = (ch >= 'a') ? ch - 'a' : ch - 'A';
            parties.push_back({q});
        }
    }
    return PartySplit(parties, n_qubits);  // validates the partition
}

} // namespace upb
