#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "audit/types.hpp"

namespace audit {

enum class ClassSystem { Feor, Soc };

inline const char* class_system_name(ClassSystem s) {
    return s == ClassSystem::Feor ? "FEOR" : "SOC";
}

enum class ExclusionKind { GenderMarkedName, ReligiousOccupation, NotWellKnown, Other };

const char* exclusion_kind_name(ExclusionKind kind);
ExclusionKind parse_exclusion_kind(const std::string& s);

struct ExclusionRule {
    ExclusionKind kind = ExclusionKind::Other;
    std::string note;
};

struct Occupation {
    std::string id;
    std::string name_source;   // source-language name, diacritics preserved
    std::string name_gloss;    // optional target-language gloss for reports
    std::string feor_code;
    std::string soc_code;      // empty when unresolved
    std::string isco_code;
    std::string sector_id;
    std::optional<ExclusionRule> excluded;

    bool scoreable() const { return !excluded.has_value(); }
};

struct OccupationCategory {
    std::string code;
    ClassSystem system = ClassSystem::Feor;
    std::string name;
    std::optional<GenderShare> share;           // absent = suppressed/unavailable
    std::optional<long long> employment_count;  // absent = unknown
    std::vector<std::string> members;           // occupation ids, derived from rows
};

struct CrosswalkEntry {
    std::string feor_code;
    std::string isco_code;
    std::string soc_code;
    bool manual_override = false;
};

// Immutable after load; safe to share read-only across workers.
class Registry {
public:
    std::vector<Occupation> occupations;                 // sorted by id
    std::map<std::string, OccupationCategory> feor;      // code -> category
    std::map<std::string, OccupationCategory> soc;       // code -> category
    std::vector<CrosswalkEntry> crosswalk;

    const Occupation* find_occupation(const std::string& id) const;
    std::size_t scoreable_count() const;

    nlohmann::json to_json() const;
    static Registry from_json(const nlohmann::json& j);
};

Registry load_registry(const std::filesystem::path& occupations_file,
                       const std::filesystem::path& categories_feor_file,
                       const std::filesystem::path& categories_soc_file,
                       const std::filesystem::path& crosswalk_file);

enum class CoverageReason { NoCategoryLink, CategorySuppressed, InvalidShare };

const char* coverage_reason_name(CoverageReason reason);

struct CoverageGap {
    std::string occupation_id;
    CoverageReason reason;
};

struct ReferenceResolution {
    std::map<std::string, GenderShare> shares;  // occupation_id -> share
    std::vector<CoverageGap> gaps;
};

// kind must be SourceStats or TargetStats; the perception reference is built
// from survey tallies instead (see survey.hpp).
ReferenceResolution resolve_reference(const Registry& registry, ReferenceKind kind);

enum class IssueKind {
    ShareSumViolation,
    DanglingCrosswalk,
    MissingShare,
    NegativeCount,
    UnknownSector,
};

const char* issue_kind_name(IssueKind kind);

struct Issue {
    IssueKind kind;
    std::string subject;  // occupation/category/crosswalk identifier
    std::string detail;
};

std::vector<Issue> validate_registry(const Registry& registry);

// Sector list is ingested separately (sectors.csv); this cross-checks the
// sector ids carried by occupations.
struct Sector {
    std::string id;
    std::string name;
};

std::vector<Sector> load_sectors(const std::filesystem::path& sectors_file);
std::vector<Issue> check_sectors(const Registry& registry, const std::vector<Sector>& sectors);

}  // namespace audit
