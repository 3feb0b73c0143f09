#include "upb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "upb/claims.hpp"
#include "upb/errors.hpp"
#include "upb/geupb.hpp"
#include "upb/state.hpp"
#include "upb/structure.hpp"
#include "upb/unextend.hpp"
#include "upb/uom.hpp"

namespace upb {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kToolVersion = "upb-lab 1.0.0";

// ---------------------------------------------------------------------------
// JSON rendering (exact values only: rationals as "num/den" strings)
// ---------------------------------------------------------------------------

ojson jgauss(const GaussRat& z) {
    ojson o = ojson::object();
    o["re"] = rat_str(z.re);
    o["im"] = rat_str(z.im);
    return o;
}

ojson jvec(const CMatrix& column) {
    ojson arr = ojson::array();
    for (int r = 0; r < column.rows(); ++r) arr.push_back(jgauss(column.at(r, 0)));
    return arr;
}

ojson jwitness(const ExtensionWitness& w, const PartySplit& split) {
    ojson o = ojson::object();
    o["split"] = split.str();
    ojson assign = ojson::array();
    for (int a : w.assignment) assign.push_back(a);
    o["assignment"] = assign;
    ojson vecs = ojson::array();
    for (const auto& pv : w.party_vectors) vecs.push_back(jvec(monic(pv)));
    o["partyVectors"] = vecs;
    return o;
}

ojson jfamily(const SolutionFamily& fam) {
    ojson o = ojson::object();
    ojson assign = ojson::array();
    for (int a : fam.assignment) assign.push_back(a);
    o["assignment"] = assign;
    o["isolated"] = fam.isolated();
    ojson bases = ojson::array();
    for (const auto& basis : fam.party_bases) {
        ojson b = ojson::array();
        for (const auto& v : basis) b.push_back(jvec(monic(v)));
        bases.push_back(b);
    }
    o["partyBases"] = bases;
    return o;
}

std::string cut_name(const std::vector<int>& side, int n) {
    std::string a, b;
    for (int q = 0; q < n; ++q) {
        bool in = std::find(side.begin(), side.end(), q) != side.end();
        (in ? a : b) += char('A' + q);
    }
    return a + "|" + b;
}

std::string kind_str(SplitVerdict::Kind kind) {
    switch (kind) {
        case SplitVerdict::Kind::Unextendible: return "unextendible";
        case SplitVerdict::Kind::Extendible: return "extendible";
        case SplitVerdict::Kind::TwoByNAutoFail: return "2xN-extendible";
    }
    return "?";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------------------
// Shared command state
// ---------------------------------------------------------------------------

struct CliState {
    std::uint64_t seed = 1;
    bool json = false;
    std::string out;
    bool force = false;
    bool timing = false;
    std::chrono::steady_clock::time_point start;

    SearchOptions options() const {
        SearchOptions o;
        o.force = force;
        return o;
    }

    // Assemble the certificate envelope, write/print it, return exit_code.
    int emit(const std::string& command, const ojson& params, const ojson& claims,
             const ojson& witnesses, const std::string& text, int exit_code) const {
        ojson cert = ojson::object();
        cert["command"] = command;
        cert["params"] = params;
        cert["claims"] = claims;
        cert["witnesses"] = witnesses;
        if (timing) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            cert["timingMs"] = ms;
        } else {
            cert["timingMs"] = nullptr;
        }
        cert["toolVersion"] = kToolVersion;

        std::string bytes = cert.dump(2);
        bytes += '\n';
        if (!out.empty()) {
            std::ofstream f(out, std::ios::binary);
            if (!f) throw ParseError("cannot write file: " + out);
            f << bytes;
        }
        if (json)
            std::cout << bytes;
        else
            std::cout << text;
        return exit_code;
    }
};

// Resolve the input grid: --file wins over --uom; plain "--uom NAME" reads
// the built-in catalog.
UomSpec load_spec(const std::string& uom, const std::string& file) {
    if (!file.empty()) return uom_from_json(read_file(file));
    if (uom.empty()) throw ParseError("no input: pass --uom NAME or --file PATH");
    return catalog_by_name(uom);
}

// ---------------------------------------------------------------------------
// Subcommand handlers
// ---------------------------------------------------------------------------

int do_catalog(const CliState& st, const std::string& name) {
    ojson params = ojson::object();
    params["name"] = name.empty() ? ojson(nullptr) : ojson(name);
    ojson entries = ojson::array();
    std::ostringstream text;
    auto render = [&](const UomSpec& spec) {
        entries.push_back(ojson::parse(uom_to_json(spec)));
        text << spec.name << " (" << spec.rows << "x" << spec.cols << ")\n";
        for (const auto& row : spec.grid) {
            text << " ";
            for (const auto& label : row) {
                std::string s = label.str();
                text << " " << s << std::string(s.size() < 4 ? 4 - s.size() : 1, ' ');
            }
            text << "\n";
        }
        for (const auto& con : spec.constraints) {
            text << "  " << con.subject << " not in {";
            for (size_t i = 0; i < con.forbidden.size(); ++i)
                text << (i ? ", " : "") << con.forbidden[i].str();
            text << "}\n";
        }
        for (const auto& note : spec.lint()) text << "  note: " << note << "\n";
    };
    if (!name.empty()) {
        render(catalog_by_name(name));
    } else {
        for (const auto& spec : catalog()) render(spec);
    }
    ojson claims = ojson::object();
    claims["entries"] = entries;
    return st.emit("catalog", params, claims, ojson::array(), text.str(), 0);
}

int do_verify(const CliState& st, const std::string& uom, const std::string& file,
              const std::string& split_text) {
    UomSpec spec = load_spec(uom, file);
    auto inst = instantiate(spec, st.seed);
    PartySplit split = PartySplit::parse(split_text, inst.set.n_qubits);

    ojson params = ojson::object();
    params["uom"] = spec.name;
    params["seed"] = st.seed;
    params["split"] = split.str();

    ojson claims = ojson::object();
    ojson witnesses = ojson::array();
    std::ostringstream text;
    int exit_code = 0;

    auto bad = check_orthogonality(inst.set);
    claims["orthogonal"] = !bad.has_value();
    if (bad) {
        ojson rows = ojson::array();
        rows.push_back(bad->first + 1);
        rows.push_back(bad->second + 1);
        claims["violatingRows"] = rows;
        claims["verdict"] = "not orthogonal";
        text << spec.name << " @ seed " << st.seed << ": rows " << (bad->first + 1)
             << "," << (bad->second + 1) << " are not orthogonal\n";
        exit_code = 1;
    } else {
        auto grouped = group(inst.set, split);
        auto witness = find_extension(grouped, st.options());
        claims["unextendible"] = !witness.has_value();
        claims["verdict"] = witness ? "extendible" : "unextendible";
        text << spec.name << " @ seed " << st.seed << " under " << split.str()
             << ": " << (witness ? "extendible" : "unextendible") << "\n";
        if (witness) {
            witnesses.push_back(jwitness(*witness, split));
            text << "  witness assignment:";
            for (int a : witness->assignment) text << " " << a;
            text << "\n";
            exit_code = 1;
        }
    }
    return st.emit("verify", params, claims, witnesses, text.str(), exit_code);
}

int do_enumerate(const CliState& st, const std::string& uom, const std::string& file,
                 const std::string& split_text, int drop) {
    UomSpec spec = load_spec(uom, file);
    auto set = instantiate(spec, st.seed).set;
    if (drop > 0) set = drop_row(set, drop);
    PartySplit split = PartySplit::parse(split_text, set.n_qubits);

    ojson params = ojson::object();
    params["uom"] = spec.name;
    params["seed"] = st.seed;
    params["drop"] = drop > 0 ? ojson(drop) : ojson(nullptr);
    params["split"] = split.str();

    auto sols = enumerate_orthogonal(group(set, split), st.options());

    ojson claims = ojson::object();
    claims["rows"] = set.size();
    claims["finite"] = sols.finite;
    claims["isolatedCount"] = sols.isolated_count;
    claims["familyCount"] = int(sols.families.size());

    ojson witnesses = ojson::array();
    for (const auto& fam : sols.families) witnesses.push_back(jfamily(fam));

    std::ostringstream text;
    text << spec.name << " @ seed " << st.seed;
    if (drop > 0) text << " minus row " << drop;
    text << " under " << split.str() << ": ";
    if (sols.finite)
        text << sols.isolated_count << " isolated orthogonal product solutions\n";
    else
        text << "a continuous solution family exists (" << sols.families.size()
             << " families)\n";
    return st.emit("enumerate", params, claims, witnesses, text.str(), 0);
}

int do_state(const CliState& st, const std::string& uom, const std::string& file,
             int drop, bool sweep) {
    if (sweep) {
        std::vector<std::string> names;
        if (!uom.empty() || !file.empty()) {
            names.push_back(load_spec(uom, file).name);
        } else {
            names = {"F1", "F2", "F3", "F4", "F5", "F6"};
        }
        ojson params = ojson::object();
        params["uom"] = names.size() == 1 ? ojson(names[0]) : ojson(nullptr);
        params["seed"] = st.seed;
        params["sweep"] = true;
        ojson rows = ojson::array();
        std::ostringstream text;
        for (const auto& name : names) {
            UomSpec spec = file.empty() ? catalog_by_name(name) : load_spec(uom, file);
            auto set = instantiate(spec, st.seed).set;
            // The published remark about subsets with many product vectors
            // concerns the bipartite (4x4) census, so sweep under AB:CD.
            auto census = drop_one_census(set, PartySplit::ab_cd(), st.options());
            for (int r = 1; r <= set.size(); ++r) {
                const auto& count = census.counts[size_t(r - 1)];
                ojson o = ojson::object();
                o["uom"] = spec.name;
                o["droppedRow"] = r;
                o["finite"] = census.finite[size_t(r - 1)];
                o["count"] = count ? ojson(*count) : ojson(nullptr);
                rows.push_back(o);
                text << spec.name << " minus row " << r << ": ";
                if (count) {
                    text << *count << " solutions";
                    if (*count > 9) text << "  (more than nine)";
                } else {
                    text << "continuous family";
                }
                text << "\n";
            }
        }
        ojson claims = ojson::object();
        claims["sweep"] = rows;
        return st.emit("state", params, claims, ojson::array(), text.str(), 0);
    }

    UomSpec spec = load_spec(uom, file);
    auto set = instantiate(spec, st.seed).set;
    if (drop > 0) set = drop_row(set, drop);

    ojson params = ojson::object();
    params["uom"] = spec.name;
    params["seed"] = st.seed;
    params["drop"] = drop > 0 ? ojson(drop) : ojson(nullptr);

    auto dm = build_complement_state(set);
    ojson ppt = ojson::object();
    for (const auto& side : bipartite_cuts(dm.n_qubits))
        ppt[cut_name(side, dm.n_qubits)] =
            is_psd(partial_transpose(dm.rho, side, dm.n_qubits));

    auto cert = certify(set, st.options());

    ojson claims = ojson::object();
    claims["rank"] = cert.rank;
    claims["trace"] = rat_str(dm.rho.trace().re);
    claims["ppt"] = ppt;
    claims["rangeProductCount"] =
        cert.ranges.empty()
            ? ojson(nullptr)
            : (cert.ranges[0].finite ? ojson(cert.ranges[0].solution_count)
                                     : ojson("infinite"));
    claims["entangled"] = cert.bound_entangled;
    ojson sv = ojson::array();
    for (const auto& r : cert.ranges) {
        ojson o = ojson::object();
        o["split"] = r.split.str();
        o["finite"] = r.finite;
        o["solutionCount"] = r.solution_count;
        o["spanRank"] = r.span_rank;
        o["threshold"] = r.threshold;
        o["entangled"] = r.entangled;
        sv.push_back(o);
    }
    claims["splitVerdicts"] = sv;

    std::ostringstream text;
    text << spec.name << " @ seed " << st.seed;
    if (drop > 0) text << " minus row " << drop;
    text << ": complement state rank " << cert.rank << ", trace "
         << rat_str(dm.rho.trace().re) << ", PPT "
         << (cert.ppt_all_cuts ? "on all 7 cuts" : "violated on some cut") << "\n";
    for (const auto& r : cert.ranges)
        text << "  " << r.split.str() << ": product span " << r.span_rank
             << " <= threshold " << r.threshold << " is "
             << (r.entangled ? "satisfied" : "violated") << "\n";
    text << "  verdict: " << cert.verdict << "\n";
    return st.emit("state", params, claims, ojson::array(), text.str(),
                   cert.bound_entangled ? 0 : 1);
}

int do_ge(const CliState& st, const std::string& uom, const std::string& file) {
    UomSpec spec = load_spec(uom, file);
    auto set = instantiate(spec, st.seed).set;

    ojson params = ojson::object();
    params["uom"] = spec.name;
    params["seed"] = st.seed;

    auto verdict = ge_check(set, st.options());

    ojson claims = ojson::object();
    claims["orthogonal"] = verdict.orthogonal;
    ojson cuts = ojson::array();
    ojson witnesses = ojson::array();
    for (const auto& sv : verdict.splits) {
        ojson o = ojson::object();
        o["cut"] = sv.split.str();
        o["kind"] = kind_str(sv.kind);
        o["witness"] = sv.witness.has_value();
        cuts.push_back(o);
        if (sv.witness) witnesses.push_back(jwitness(*sv.witness, sv.split));
    }
    claims["cuts"] = cuts;
    claims["unextendibleCount"] = verdict.unextendible_count;
    claims["isGeupb"] = verdict.ge;
    claims["isAlmostGe"] = verdict.almost_ge;
    claims["summary"] = verdict.summary;

    std::ostringstream text;
    text << spec.name << " @ seed " << st.seed << ": " << verdict.summary << "\n";
    for (const auto& sv : verdict.splits)
        text << "  " << sv.split.str() << ": " << kind_str(sv.kind) << "\n";
    return st.emit("ge", params, claims, witnesses, text.str(),
                   verdict.almost_ge ? 0 : 1);
}

int do_tensor(const CliState& st, const std::string& left, const std::string& right,
              bool verify) {
    auto l = instantiate(catalog_by_name(left), st.seed);
    auto r = instantiate(catalog_by_name(right), st.seed + 1);
    auto square = tensor_sets(l.set, r.set);

    // Pair the factors' finest splits: party k holds qubit k of each factor.
    auto finest = [](int n) {
        std::vector<std::vector<int>> parties;
        for (int q = 0; q < n; ++q) parties.push_back({q});
        return PartySplit(parties, n);
    };
    PartySplit paired = tensor_split(finest(l.set.n_qubits), finest(r.set.n_qubits));

    ojson params = ojson::object();
    params["left"] = left;
    params["right"] = right;
    params["seed"] = st.seed;
    params["verify"] = verify;

    ojson claims = ojson::object();
    claims["rows"] = square.size();
    claims["qubits"] = square.n_qubits;
    auto bad = check_orthogonality(square);
    claims["orthogonal"] = !bad.has_value();
    claims["split"] = paired.str();

    std::ostringstream text;
    text << left << " (x) " << right << " @ seeds " << st.seed << ","
         << (st.seed + 1) << ": " << square.size() << " rows on "
         << square.n_qubits << " qubits, "
         << (bad ? "NOT orthogonal" : "orthogonal") << "\n";

    int exit_code = bad ? 1 : 0;
    if (verify && !bad) {
        bool upb = is_upb(square, paired, st.options());
        claims["unextendible"] = upb;
        text << "  under " << paired.str() << ": "
             << (upb ? "unextendible" : "extendible") << "\n";
        exit_code = upb ? 0 : 1;
    }
    return st.emit("tensor", params, claims, ojson::array(), text.str(), exit_code);
}

int do_predicates(const CliState& st, const std::string& uom, const std::string& file,
                  int fuzz) {
    ojson params = ojson::object();
    ojson claims = ojson::object();
    std::ostringstream text;
    int exit_code = 0;

    if (!uom.empty() || !file.empty()) {
        UomSpec spec = load_spec(uom, file);
        auto set = instantiate(spec, st.seed).set;
        params["uom"] = spec.name;
        params["seed"] = st.seed;

        auto profiles = o_numbers(set);
        auto bc = bound_check(set);
        auto fired = exclusion_predicates(set);
        bool upb_ab_cd = is_upb(set, PartySplit::ab_cd(), st.options());

        ojson pj = ojson::array();
        for (long long p : bc.p) pj.push_back(p);
        claims["oNumbers"] = pj;
        claims["sum"] = bc.sum;
        claims["threshold"] = bc.threshold;
        claims["holds"] = bc.holds;
        ojson cols = ojson::array();
        for (const auto& pr : profiles) {
            ojson o = ojson::object();
            o["column"] = pr.column;
            o["oNumber"] = pr.o_number;
            ojson classes = ojson::array();
            for (const auto& mult : pr.multiplicities) {
                ojson m = ojson::object();
                m["state"] = mult.first.str();
                m["count"] = mult.second;
                classes.push_back(m);
            }
            o["classes"] = classes;
            cols.push_back(o);
        }
        claims["columns"] = cols;
        ojson fj = ojson::array();
        for (const auto& f : fired) {
            ojson o = ojson::object();
            o["name"] = f.name;
            o["detail"] = f.detail;
            fj.push_back(o);
        }
        claims["fired"] = fj;
        claims["upbAbCd"] = upb_ab_cd;

        text << spec.name << " @ seed " << st.seed << ": pair counts [";
        for (size_t i = 0; i < bc.p.size(); ++i) text << (i ? "," : "") << bc.p[i];
        text << "] sum " << bc.sum << " >= " << bc.threshold << " "
             << (bc.holds ? "holds" : "FAILS") << "\n";
        if (fired.empty())
            text << "  no exclusion predicate fired\n";
        else
            for (const auto& f : fired)
                text << "  fired: " << f.name << " (" << f.detail << ")\n";
        text << "  unextendible under AB:CD: " << (upb_ab_cd ? "yes" : "no") << "\n";
        if (!bc.holds || !fired.empty()) exit_code = 1;
    } else if (fuzz <= 0) {
        throw ParseError("predicates: pass --uom NAME, --file PATH or --fuzz N");
    }

    if (fuzz > 0) {
        int fired_sets = 0, unsound = 0;
        ojson failures = ojson::array();
        for (std::uint64_t fs = 1; fs <= std::uint64_t(fuzz); ++fs) {
            auto set = gen_random_orthogonal(fs);
            auto fired = exclusion_predicates(set);
            if (fired.empty()) continue;
            ++fired_sets;
            auto witness = find_extension(group(set, PartySplit::ab_cd()), st.options());
            if (!witness) {
                ++unsound;
                failures.push_back(fs);
            }
        }
        ojson fz = ojson::object();
        fz["runs"] = fuzz;
        fz["fired"] = fired_sets;
        fz["sound"] = unsound == 0;
        fz["failures"] = failures;
        claims["fuzz"] = fz;
        params["fuzz"] = fuzz;
        text << "fuzz: " << fired_sets << "/" << fuzz
             << " random orthogonal sets fired a predicate; "
             << (unsound == 0 ? "every firing had an AB:CD extension witness"
                              : "SOUNDNESS VIOLATIONS FOUND")
             << "\n";
        if (unsound > 0) exit_code = 1;
    }
    return st.emit("predicates", params, claims, ojson::array(), text.str(), exit_code);
}

int do_maxsum(const CliState& st, int p, int n, bool oracle) {
    auto ms = maxsum(p, n);

    ojson params = ojson::object();
    params["p"] = p;
    params["n"] = n;
    params["oracle"] = oracle;

    ojson claims = ojson::object();
    claims["value"] = ms.value;
    ojson parts = ojson::array();
    for (int a : ms.extremal) parts.push_back(a);
    claims["extremal"] = parts;

    std::ostringstream text;
    text << "maxsum(" << p << "," << n << ") = " << ms.value << ", extremal parts [";
    for (size_t i = 0; i < ms.extremal.size(); ++i)
        text << (i ? "," : "") << ms.extremal[i];
    text << "]\n";

    int exit_code = 0;
    if (oracle) {
        long long v = maxsum_oracle(p, n);
        claims["oracleValue"] = v;
        claims["agree"] = v == ms.value;
        text << "  oracle: " << v << " (" << (v == ms.value ? "agrees" : "DISAGREES")
             << ")\n";
        if (v != ms.value) exit_code = 1;
    }
    return st.emit("maxsum", params, claims, ojson::array(), text.str(), exit_code);
}

int do_invariants(const CliState& st, const std::string& uom) {
    ojson params = ojson::object();
    params["uom"] = uom.empty() ? ojson(nullptr) : ojson(uom);

    std::vector<std::string> names;
    if (!uom.empty())
        names.push_back(uom);
    else
        names = {"F1", "F2", "F3", "F4", "F5", "F6"};

    ojson entries = ojson::array();
    std::ostringstream text;
    for (const auto& name : names) {
        const UomSpec& spec = catalog_by_name(name);
        ojson e = ojson::object();
        e["name"] = spec.name;
        ojson counts = ojson::array();
        for (int cnt : independent_variable_counts(spec)) counts.push_back(cnt);
        e["variableCounts"] = counts;
        ojson cp = ojson::array(), eo = ojson::array();
        for (int a = 0; a < spec.cols; ++a) {
            ojson cprow = ojson::array(), eorow = ojson::array();
            for (int b = 0; b < spec.cols; ++b) {
                cprow.push_back(coincidence_profile(spec, a, b));
                eorow.push_back(equal_orthogonal_profile(spec, a, b));
            }
            cp.push_back(cprow);
            eo.push_back(eorow);
        }
        e["coincidenceProfile"] = cp;
        e["equalOrthogonalProfile"] = eo;
        ojson lint = ojson::array();
        for (const auto& note : spec.lint()) lint.push_back(note);
        e["lint"] = lint;
        entries.push_back(e);

        text << spec.name << ": variable counts [";
        auto vc = independent_variable_counts(spec);
        for (size_t i = 0; i < vc.size(); ++i) text << (i ? "," : "") << vc[i];
        text << "]\n";
    }
    ojson claims = ojson::object();
    claims["entries"] = entries;

    if (uom.empty()) {
        ojson pairs = ojson::array();
        const std::vector<std::string> fams = {"F1", "F2", "F3", "F4", "F5", "F6"};
        for (size_t i = 0; i < fams.size(); ++i) {
            for (size_t j = i + 1; j < fams.size(); ++j) {
                auto rep = inequivalence_report(catalog_by_name(fams[i]),
                                                catalog_by_name(fams[j]));
                ojson o = ojson::object();
                o["pair"] = fams[i] + ":" + fams[j];
                o["verdict"] =
                    rep.verdict == InequivalenceReport::Verdict::DistinguishedByCounts
                        ? "counts"
                        : (rep.verdict ==
                                   InequivalenceReport::Verdict::DistinguishedByCoincidence
                               ? "coincidence"
                               : "undistinguished");
                o["detail"] = rep.detail;
                pairs.push_back(o);
                text << o["pair"].get<std::string>() << ": "
                     << o["verdict"].get<std::string>() << "\n";
            }
        }
        claims["pairs"] = pairs;
    }
    return st.emit("invariants", params, claims, ojson::array(), text.str(), 0);
}

int do_reproduce(CliState& st, std::vector<std::uint64_t> seeds,
                 const std::string& only, bool corrupt) {
    if (st.out.empty()) st.out = "report.json";
    if (seeds.empty()) seeds = default_seeds();

    ojson params = ojson::object();
    ojson sj = ojson::array();
    for (auto s : seeds) sj.push_back(s);
    params["seeds"] = sj;
    params["only"] = only;
    params["corrupt"] = corrupt;

    ojson results = ojson::array();
    std::ostringstream text;
    std::string first_fail;

    if (corrupt) {
        // Negative control: flip one catalog cell and show the pipeline
        // catches it as an orthogonality failure.
        UomSpec broken = corrupt_cell(catalog_by_name("F1"), 0, 3, Label::one());
        broken.name = "F1(corrupted)";
        auto inst = instantiate(broken, seeds.front());
        auto bad = check_orthogonality(inst.set);
        ojson r = ojson::object();
        r["slug"] = "orthogonality";
        r["title"] = "Corrupted catalog entry must fail the orthogonality check";
        r["pass"] = false;
        r["detail"] = "cell (1,4) flipped from 0 to 1";
        ojson fails = ojson::array();
        if (bad) {
            std::ostringstream f;
            f << "F1(corrupted) seed " << seeds.front() << ": rows "
              << (bad->first + 1) << "," << (bad->second + 1)
              << " have nonzero inner product";
            fails.push_back(f.str());
            text << "FAIL orthogonality: " << f.str() << "\n";
        } else {
            fails.push_back("corrupted entry unexpectedly stayed orthogonal");
            text << "FAIL orthogonality: corrupted entry unexpectedly stayed "
                    "orthogonal\n";
        }
        r["failures"] = fails;
        results.push_back(r);
        first_fail = "orthogonality";
    } else {
        if (only != "all") {
            auto slugs = claim_slugs();
            if (std::find(slugs.begin(), slugs.end(), only) == slugs.end())
                throw ParseError("unknown claim slug: " + only);
        }
        auto claims_run = run_claims(seeds, only);
        for (const auto& c : claims_run) {
            ojson r = ojson::object();
            r["slug"] = c.slug;
            r["title"] = c.title;
            r["pass"] = c.pass;
            r["detail"] = c.detail;
            ojson fails = ojson::array();
            for (const auto& f : c.failures) fails.push_back(f);
            r["failures"] = fails;
            if (c.slug == "table1") {
                ojson counts = ojson::object();
                for (const char* fam : {"F1", "F2", "F3", "F4", "F5", "F6"}) {
                    ojson arr = ojson::array();
                    for (int v : independent_variable_counts(catalog_by_name(fam)))
                        arr.push_back(v);
                    counts[fam] = arr;
                }
                r["counts"] = counts;
            }
            results.push_back(r);
            text << (c.pass ? "PASS" : "FAIL") << " " << c.slug << ": " << c.detail
                 << "\n";
            if (!c.pass) {
                for (size_t i = 0; i < c.failures.size() && i < 3; ++i)
                    text << "      " << c.failures[i] << "\n";
                if (c.failures.size() > 3)
                    text << "      ... " << (c.failures.size() - 3) << " more\n";
                if (first_fail.empty()) first_fail = c.slug;
            }
        }
    }

    ojson claims = ojson::object();
    claims["allPass"] = first_fail.empty();
    claims["results"] = results;

    if (first_fail.empty())
        text << "all claims passed\n";
    else
        text << "first failing claim: " << first_fail << "\n";
    text << "report written to " << st.out << "\n";

    return st.emit("reproduce", params, claims, ojson::array(), text.str(),
                   first_fail.empty() ? 0 : 1);
}

} // namespace

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

int run_cli(int argc, char** argv) {
    CliState st;
    st.start = std::chrono::steady_clock::now();

    CLI::App app{"upb-lab: exact verification of unextendible product bases"};
    app.require_subcommand(1);
    app.add_option("--seed", st.seed, "instantiation seed (default 1)");
    app.add_flag("--json", st.json, "print the JSON certificate to stdout");
    app.add_option("--out", st.out, "also write the JSON certificate to FILE");
    app.add_flag("--force", st.force, "override the assignment-search budget guard");
    app.add_flag("--timing", st.timing,
                 "fill timingMs in the certificate (breaks byte determinism)");

    auto* cmd_catalog = app.add_subcommand("catalog", "print the built-in grid catalog");
    cmd_catalog->fallthrough();
    std::string cat_name;
    cmd_catalog->add_option("--name", cat_name, "single catalog entry");

    auto* cmd_verify =
        app.add_subcommand("verify", "check unextendibility under one grouping "
                                     "(exit 0 iff orthogonal and unextendible)");
    cmd_verify->fallthrough();
    std::string v_uom, v_file, v_split = "ABCD";
    cmd_verify->add_option("--uom", v_uom, "catalog entry name");
    cmd_verify->add_option("--file", v_file, "JSON grid file");
    cmd_verify->add_option("--split", v_split,
                           "grouping, e.g. ABCD, A:B:CD, AB:CD (default ABCD)");

    auto* cmd_enumerate = app.add_subcommand(
        "enumerate", "census of product vectors orthogonal to the (sub)set");
    cmd_enumerate->fallthrough();
    std::string e_uom, e_file, e_split = "ABCD";
    int e_drop = 0;
    cmd_enumerate->add_option("--uom", e_uom, "catalog entry name");
    cmd_enumerate->add_option("--file", e_file, "JSON grid file");
    cmd_enumerate->add_option("--drop", e_drop, "drop this row first (1-based)");
    cmd_enumerate->add_option("--split", e_split, "grouping (default ABCD)");

    auto* cmd_state = app.add_subcommand(
        "state", "complement-state certificate: rank, PPT cuts, range criterion "
                 "(exit 0 iff certified entangled)");
    cmd_state->fallthrough();
    std::string s_uom, s_file;
    int s_drop = 0;
    bool s_certify = false, s_sweep = false;
    cmd_state->add_option("--uom", s_uom, "catalog entry name");
    cmd_state->add_option("--file", s_file, "JSON grid file");
    cmd_state->add_option("--drop", s_drop, "drop this row first (1-based)");
    cmd_state->add_flag("--certify", s_certify, "full certificate (the default)");
    cmd_state->add_flag("--sweep", s_sweep,
                        "census for every drop-one subset of the six families");

    auto* cmd_ge = app.add_subcommand(
        "ge", "bipartition sweep (exit 0 iff every 4x4 cut is unextendible)");
    cmd_ge->fallthrough();
    std::string g_uom, g_file;
    cmd_ge->add_option("--uom", g_uom, "catalog entry name");
    cmd_ge->add_option("--file", g_file, "JSON grid file");

    auto* cmd_tensor =
        app.add_subcommand("tensor", "tensor two catalog sets (right uses seed+1)");
    cmd_tensor->fallthrough();
    std::string t_left = "SHIFTS3", t_right = "SHIFTS3";
    bool t_verify = false;
    cmd_tensor->add_option("--left", t_left, "left catalog entry (default SHIFTS3)");
    cmd_tensor->add_option("--right", t_right, "right catalog entry (default SHIFTS3)");
    cmd_tensor->add_flag("--verify", t_verify,
                         "also decide unextendibility under the paired grouping");

    auto* cmd_predicates = app.add_subcommand(
        "predicates", "pair-count bound and structural exclusion predicates");
    cmd_predicates->fallthrough();
    std::string p_uom, p_file;
    int p_fuzz = 0;
    cmd_predicates->add_option("--uom", p_uom, "catalog entry name");
    cmd_predicates->add_option("--file", p_file, "JSON grid file");
    cmd_predicates->add_option("--fuzz", p_fuzz,
                               "also fuzz N random orthogonal sets for soundness");

    auto* cmd_maxsum =
        app.add_subcommand("maxsum", "closed-form pairwise-product maximiser");
    cmd_maxsum->fallthrough();
    int m_p = 0, m_n = 0;
    bool m_oracle = false;
    cmd_maxsum->add_option("--p", m_p, "total to split")->required();
    cmd_maxsum->add_option("--n", m_n, "half the number of parts")->required();
    cmd_maxsum->add_flag("--oracle", m_oracle, "cross-check with brute force");

    auto* cmd_invariants = app.add_subcommand(
        "invariants", "symbolic per-column counts and pair separations");
    cmd_invariants->fallthrough();
    std::string i_uom;
    cmd_invariants->add_option("--uom", i_uom, "catalog entry name");

    auto* cmd_reproduce = app.add_subcommand(
        "reproduce", "run every claim and write report.json (exit 0 iff all pass)");
    cmd_reproduce->fallthrough();
    std::vector<std::uint64_t> r_seeds;
    std::string r_only = "all";
    bool r_corrupt = false;
    cmd_reproduce->add_option("--seeds", r_seeds, "comma-separated seed list")
        ->delimiter(',');
    cmd_reproduce->add_option("--only", r_only, "run a single claim slug");
    cmd_reproduce->add_flag("--corrupt", r_corrupt,
                            "negative control: corrupt a catalog cell first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_catalog) return do_catalog(st, cat_name);
        if (*cmd_verify) return do_verify(st, v_uom, v_file, v_split);
        if (*cmd_enumerate) return do_enumerate(st, e_uom, e_file, e_split, e_drop);
        if (*cmd_state) return do_state(st, s_uom, s_file, s_drop, s_sweep);
        if (*cmd_ge) return do_ge(st, g_uom, g_file);
        if (*cmd_tensor) return do_tensor(st, t_left, t_right, t_verify);
        if (*cmd_predicates) return do_predicates(st, p_uom, p_file, p_fuzz);
        if (*cmd_maxsum) return do_maxsum(st, m_p, m_n, m_oracle);
        if (*cmd_invariants) return do_invariants(st, i_uom);
        if (*cmd_reproduce) return do_reproduce(st, r_seeds, r_only, r_corrupt);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (rerun with --force)\n";
        return 3;
    } catch (const NotOrthogonal& e) {
        std::cerr << "claim failure: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownVariable& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const WrongShape& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ArityMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BadArity& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const SetTooLarge& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ConstraintUnsatisfiable& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace upb
