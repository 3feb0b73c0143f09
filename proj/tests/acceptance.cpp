// Acceptance gate: runs every top-level claim end to end and prints one
// PASS/FAIL line per claim.  Exit status 0 iff every claim passed.
//
//   --seeds 1,2,3   override the default seed list
//   --only SLUG     run a single claim
//   --list          print the claim slugs and exit

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "upb/claims.hpp"

namespace {

std::vector<std::uint64_t> parse_seeds(const std::string& csv) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) seeds.push_back(std::stoull(item));
    }
    return seeds;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::uint64_t> seeds = upb::default_seeds();
    std::string only = "all";

    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--list") == 0) {
            for (const auto& slug : upb::claim_slugs()) std::printf("%s\n", slug.c_str());
            return 0;
        }
        if (std::strcmp(argv[i], "--seeds") == 0 && i + 1 < argc) {
            seeds = parse_seeds(argv[++i]);
        } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = argv[++i];
        } else {
            std::fprintf(stderr, "usage: %s [--seeds CSV] [--only SLUG] [--list]\n",
                         argv[0]);
            return 2;
        }
    }

    std::printf("running %zu claim(s) over %zu seed(s)\n",
                only == "all" ? upb::claim_slugs().size() : size_t(1), seeds.size());

    auto results = upb::run_claims(seeds, only);
    int failed = 0;
    int idx = 0;
    for (const auto& r : results) {
        ++idx;
        std::printf("[%2d/%zu] %s %s — %s\n", idx, results.size(),
                    r.pass ? "PASS" : "FAIL", r.slug.c_str(), r.detail.c_str());
        if (!r.pass) {
            ++failed;
            size_t shown = 0;
            for (const auto& f : r.failures) {
                std::printf("        %s\n", f.c_str());
                if (++shown >= 10) {
                    std::printf("        ... %zu more\n", r.failures.size() - shown);
                    break;
                }
            }
        }
    }
    if (failed == 0) {
        std::printf("all %zu claim(s) passed\n", results.size());
        return 0;
    }
    std::printf("%d claim(s) FAILED\n", failed);
    return 1;
}
