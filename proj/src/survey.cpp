#include "audit/survey.hpp"

#include <set>

#include "audit/csv.hpp"
#include "audit/io.hpp"

namespace audit {

long long LikertTally::total() const {
    long long sum = 0;
    for (long long c : counts) sum += c;
    return sum;
}

double likert_weight(int response) {
    switch (response) {
        case 1: case 6: return 2.5;
        case 2: case 5: return 1.5;
        case 3: case 4: return 0.5;
        default:
            throw AuditError(ErrorCode::OutOfRange,
                             "Likert response must be 1..6, got " + std::to_string(response));
    }
}

PerceptionScore perception_scores(const LikertTally& tally) {
    if (tally.total() <= 0)
        throw AuditError(ErrorCode::EmptyTally, "tally for `" + tally.occupation_id + "` is empty");
    // Both halves are summed from the 2.5 bucket inward so that reversing the
    // count vector swaps the two sums bit-exactly.
    const double masculine_weighted = 2.5 * static_cast<double>(tally.counts[0]) +
                                      1.5 * static_cast<double>(tally.counts[1]) +
                                      0.5 * static_cast<double>(tally.counts[2]);
    const double feminine_weighted = 2.5 * static_cast<double>(tally.counts[5]) +
                                     1.5 * static_cast<double>(tally.counts[4]) +
                                     0.5 * static_cast<double>(tally.counts[3]);
    const double weighted_total = masculine_weighted + feminine_weighted;
    return PerceptionScore{masculine_weighted / weighted_total,
                           feminine_weighted / weighted_total};
}

std::map<std::string, GenderShare> perception_reference(const std::vector<LikertTally>& tallies) {
    std::map<std::string, GenderShare> out;
    for (const LikertTally& tally : tallies) {
        const PerceptionScore score = perception_scores(tally);
        out.emplace(tally.occupation_id, GenderShare{score.femininity, score.masculinity});
    }
    return out;
}

std::vector<LikertTally> load_survey(const std::filesystem::path& survey_file) {
    const csv::Table table =
        csv::read_file(survey_file, {"occupation_id", "c1", "c2", "c3", "c4", "c5", "c6"});
    std::vector<LikertTally> out;
    std::set<std::string> seen;
    for (const csv::Row& row : table.rows) {
        const std::string where =
            survey_file.string() + ": line " + std::to_string(row.line);
        LikertTally tally;
        tally.occupation_id = row.fields[0];
        if (!seen.insert(tally.occupation_id).second)
            throw AuditError(ErrorCode::MalformedRow,
                             where + ": duplicate occupation_id `" + tally.occupation_id + "`");
        for (int i = 0; i < 6; ++i) {
            auto v = io::parse_int(row.fields[static_cast<std::size_t>(i) + 1]);
            if (!v || *v < 0)
                throw AuditError(ErrorCode::MalformedRow,
                                 where + ": counts must be non-negative integers");
            tally.counts[static_cast<std::size_t>(i)] = *v;
        }
        out.push_back(std::move(tally));
    }
    return out;
}

}  // namespace audit
