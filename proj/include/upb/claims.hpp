#ifndef UPB_CLAIMS_HPP
#define UPB_CLAIMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace upb {

// ---------------------------------------------------------------------------
// Claim harness
// ---------------------------------------------------------------------------

// One verifiable claim about the catalog, run end to end in exact
// arithmetic.  The acceptance binary and the `reproduce` subcommand both
// drive this table.
struct ClaimResult {
    std::string slug;
    std::string title;
    bool pass = false;
    std::string detail;   // one-line summary of what was checked
    std::vector<std::string> failures;  // populated when pass == false
};

// Slugs, in execution order:
//   orthogonality          every family instantiates to an orthogonal set
//                          for every seed
//   upb-three-splits       F1..F6 are unextendible under A:B:C:D, A:B:CD
//                          and AB:CD
//   table1                 per-column independent-variable counts match
//   inequivalence          all 15 family pairs distinguished by invariants
//   solution-counts        drop-one-row solution censuses match
//   complement-states      complement states are PPT and range-entangled
//   almost-ge              F6 is unextendible across all three 4x4 cuts and
//                          every 2x8 cut carries a constructed witness
//   shifts3                the 3-qubit set: unextendible at the finest
//                          split, extendible under A:BC
//   tensor-square          the tensor square is unextendible under the
//                          paired tripartite coarse-graining
//   onumbers-maxsum        o-number bound, extremal partitions, predicates
//   negative-controls      every broken variant is caught
std::vector<std::string> claim_slugs();

// Run one claim (all of them when slug == "all") over the given seeds.
std::vector<ClaimResult> run_claims(const std::vector<std::uint64_t>& seeds,
                                    const std::string& only = "all");

// Default seed list used by `reproduce` and the acceptance gate.
std::vector<std::uint64_t> default_seeds();

} // namespace upb

#endif
