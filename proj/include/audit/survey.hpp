#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "audit/types.hpp"

namespace audit {

// Raw response counts on the 1 ("very masculine") .. 6 ("very feminine")
// scale for one occupation.
struct LikertTally {
    std::string occupation_id;
    std::array<long long, 6> counts{};  // counts[0] = response 1

    long long total() const;
};

struct PerceptionScore {
    double masculinity = 0.0;
    double femininity = 0.0;
};

// 1,6 -> 2.5; 2,5 -> 1.5; 3,4 -> 0.5. Throws OutOfRange otherwise.
double likert_weight(int response);

// masculinity = weighted sum of responses 1-3 over the weighted total,
// femininity = weighted sum of responses 4-6 over the weighted total.
// Throws EmptyTally when all counts are zero.
PerceptionScore perception_scores(const LikertTally& tally);

// femininity -> GenderShare.female, masculinity -> GenderShare.male, so the
// perception reference plugs into the same scoring path as the statistics.
std::map<std::string, GenderShare> perception_reference(const std::vector<LikertTally>& tallies);

std::vector<LikertTally> load_survey(const std::filesystem::path& survey_file);

}  // namespace audit
