#include "audit/registry.hpp"

#include <algorithm>
#include <set>

#include "audit/csv.hpp"
#include "audit/io.hpp"

namespace audit {

namespace {

constexpr double kShareTolerance = 1e-9;

std::optional<GenderShare> parse_share(const std::string& female_pct, const std::string& male_pct,
                                       const std::filesystem::path& file, std::size_t line) {
    const bool f_blank = female_pct.empty();
    const bool m_blank = male_pct.empty();
    if (f_blank && m_blank) return std::nullopt;  // suppressed
    if (f_blank != m_blank)
        throw AuditError(ErrorCode::MalformedRow, file.string() + ": line " + std::to_string(line) +
                                                      ": one of female_pct/male_pct is blank");
    auto f = io::parse_double(female_pct);
    auto m = io::parse_double(male_pct);
    if (!f || !m)
        throw AuditError(ErrorCode::MalformedRow, file.string() + ": line " + std::to_string(line) +
                                                      ": percentages must be decimal numbers");
    return GenderShare{*f / 100.0, *m / 100.0};
}

std::map<std::string, OccupationCategory> load_categories(const std::filesystem::path& file,
                                                          ClassSystem system) {
    const csv::Table table = csv::read_file(
        file, {"code", "name", "female_pct", "male_pct", "employment_count"});
    std::map<std::string, OccupationCategory> out;
    for (const csv::Row& row : table.rows) {
        OccupationCategory cat;
        cat.code = row.fields[0];
        cat.system = system;
        cat.name = row.fields[1];
        if (cat.code.empty())
            throw AuditError(ErrorCode::MalformedRow,
                             file.string() + ": line " + std::to_string(row.line) + ": empty code");
        cat.share = parse_share(row.fields[2], row.fields[3], file, row.line);
        if (!row.fields[4].empty()) {
            auto count = io::parse_int(row.fields[4]);
            if (!count)
                throw AuditError(ErrorCode::MalformedRow,
                                 file.string() + ": line " + std::to_string(row.line) +
                                     ": employment_count must be an integer");
            cat.employment_count = *count;
        }
        if (!out.emplace(cat.code, std::move(cat)).second)
            throw AuditError(ErrorCode::DuplicateCategory,
                             file.string() + ": line " + std::to_string(row.line) +
                                 ": duplicate category code `" + row.fields[0] + "`");
    }
    return out;
}

std::vector<CrosswalkEntry> load_crosswalk(const std::filesystem::path& file) {
    const csv::Table table =
        csv::read_file(file, {"feor_code", "isco_code", "soc_code", "override"});
    std::vector<CrosswalkEntry> out;
    std::set<std::pair<std::string, std::string>> seen;
    for (const csv::Row& row : table.rows) {
        CrosswalkEntry e;
        e.feor_code = row.fields[0];
        e.isco_code = row.fields[1];
        e.soc_code = row.fields[2];
        if (row.fields[3] != "0" && row.fields[3] != "1")
            throw AuditError(ErrorCode::MalformedRow, file.string() + ": line " +
                                                          std::to_string(row.line) +
                                                          ": override must be 0 or 1");
        e.manual_override = row.fields[3] == "1";
        if (!seen.emplace(e.feor_code, e.soc_code).second)
            throw AuditError(ErrorCode::MalformedRow,
                             file.string() + ": line " + std::to_string(row.line) +
                                 ": duplicate (feor_code, soc_code) pair");
        out.push_back(std::move(e));
    }
    return out;
}

// Explicit soc_code on the occupation row wins; otherwise the crosswalk is
// consulted, override rows first. One-to-many mappings without an explicit
// per-occupation code stay unresolved.
std::string resolve_soc(const std::string& explicit_soc, const std::string& feor_code,
                        const std::vector<CrosswalkEntry>& crosswalk) {
    if (!explicit_soc.empty()) return explicit_soc;
    std::vector<const CrosswalkEntry*> overrides;
    std::vector<const CrosswalkEntry*> official;
    for (const CrosswalkEntry& e : crosswalk) {
        if (e.feor_code != feor_code || e.soc_code.empty()) continue;
        (e.manual_override ? overrides : official).push_back(&e);
    }
    const auto& candidates = overrides.empty() ? official : overrides;
    if (candidates.size() == 1) return candidates.front()->soc_code;
    return {};
}

}  // namespace

const char* exclusion_kind_name(ExclusionKind kind) {
    switch (kind) {
        case ExclusionKind::GenderMarkedName: return "GenderMarkedName";
        case ExclusionKind::ReligiousOccupation: return "ReligiousOccupation";
        case ExclusionKind::NotWellKnown: return "NotWellKnown";
        case ExclusionKind::Other: return "Other";
    }
    return "?";
}

ExclusionKind parse_exclusion_kind(const std::string& s) {
    if (s == "GenderMarkedName") return ExclusionKind::GenderMarkedName;
    if (s == "ReligiousOccupation") return ExclusionKind::ReligiousOccupation;
    if (s == "NotWellKnown") return ExclusionKind::NotWellKnown;
    if (s == "Other") return ExclusionKind::Other;
    throw AuditError(ErrorCode::MalformedRow, "unknown exclusion kind `" + s + "`");
}

const Occupation* Registry::find_occupation(const std::string& id) const {
    auto it = std::lower_bound(occupations.begin(), occupations.end(), id,
                               [](const Occupation& o, const std::string& key) { return o.id < key; });
    if (it == occupations.end() || it->id != id) return nullptr;
    return &*it;
}

std::size_t Registry::scoreable_count() const {
    return static_cast<std::size_t>(
        std::count_if(occupations.begin(), occupations.end(),
                      [](const Occupation& o) { return o.scoreable(); }));
}

Registry load_registry(const std::filesystem::path& occupations_file,
                       const std::filesystem::path& categories_feor_file,
                       const std::filesystem::path& categories_soc_file,
                       const std::filesystem::path& crosswalk_file) {
    Registry reg;
    reg.feor = load_categories(categories_feor_file, ClassSystem::Feor);
    reg.soc = load_categories(categories_soc_file, ClassSystem::Soc);
    reg.crosswalk = load_crosswalk(crosswalk_file);

    const csv::Table table = csv::read_file(
        occupations_file, {"id", "name_source", "name_gloss", "feor_code", "soc_code", "isco_code",
                           "sector_id", "excluded_kind", "excluded_note"});

    std::set<std::string> ids;
    std::set<std::string> names;
    for (const csv::Row& row : table.rows) {
        Occupation occ;
        occ.id = row.fields[0];
        occ.name_source = row.fields[1];
        occ.name_gloss = row.fields[2];
        occ.feor_code = row.fields[3];
        occ.isco_code = row.fields[5];
        occ.sector_id = row.fields[6];

        const std::string where =
            occupations_file.string() + ": line " + std::to_string(row.line);
        if (occ.id.empty() || occ.name_source.empty())
            throw AuditError(ErrorCode::MalformedRow, where + ": id and name_source are required");
        if (!ids.insert(occ.id).second)
            throw AuditError(ErrorCode::DuplicateOccupation, where + ": duplicate id `" + occ.id + "`");
        if (!names.insert(occ.name_source).second)
            throw AuditError(ErrorCode::DuplicateOccupation,
                             where + ": duplicate name_source `" + occ.name_source + "`");
        if (!reg.feor.count(occ.feor_code))
            throw AuditError(ErrorCode::MissingCategory,
                             where + ": unknown feor_code `" + occ.feor_code + "`");

        if (!row.fields[7].empty()) {
            occ.excluded = ExclusionRule{parse_exclusion_kind(row.fields[7]), row.fields[8]};
        } else if (!row.fields[8].empty()) {
            throw AuditError(ErrorCode::MalformedRow, where + ": excluded_note without excluded_kind");
        }

        occ.soc_code = resolve_soc(row.fields[4], occ.feor_code, reg.crosswalk);
        reg.occupations.push_back(std::move(occ));
    }

    std::sort(reg.occupations.begin(), reg.occupations.end(),
              [](const Occupation& a, const Occupation& b) { return a.id < b.id; });

    for (const Occupation& occ : reg.occupations) {
        reg.feor[occ.feor_code].members.push_back(occ.id);
        if (!occ.soc_code.empty()) {
            auto it = reg.soc.find(occ.soc_code);
            if (it == reg.soc.end())
                throw AuditError(ErrorCode::MissingCategory, occupations_file.string() +
                                                                 ": occupation `" + occ.id +
                                                                 "` resolves to unknown soc_code `" +
                                                                 occ.soc_code + "`");
            it->second.members.push_back(occ.id);
        }
    }
    return reg;
}

const char* coverage_reason_name(CoverageReason reason) {
    switch (reason) {
        case CoverageReason::NoCategoryLink: return "NoCategoryLink";
        case CoverageReason::CategorySuppressed: return "CategorySuppressed";
        case CoverageReason::InvalidShare: return "InvalidShare";
    }
    return "?";
}

ReferenceResolution resolve_reference(const Registry& registry, ReferenceKind kind) {
    if (kind != ReferenceKind::SourceStats && kind != ReferenceKind::TargetStats)
        throw AuditError(ErrorCode::ConfigError,
                         "resolve_reference handles source/target statistics only");
    const bool source = kind == ReferenceKind::SourceStats;
    const auto& categories = source ? registry.feor : registry.soc;

    ReferenceResolution res;
    for (const Occupation& occ : registry.occupations) {
        if (!occ.scoreable()) continue;
        const std::string& code = source ? occ.feor_code : occ.soc_code;
        if (code.empty()) {
            res.gaps.push_back({occ.id, CoverageReason::NoCategoryLink});
            continue;
        }
        auto it = categories.find(code);
        if (it == categories.end()) {
            res.gaps.push_back({occ.id, CoverageReason::NoCategoryLink});
            continue;
        }
        if (!it->second.share) {
            res.gaps.push_back({occ.id, CoverageReason::CategorySuppressed});
            continue;
        }
        if (!it->second.share->balanced(kShareTolerance)) {
            res.gaps.push_back({occ.id, CoverageReason::InvalidShare});
            continue;
        }
        res.shares.emplace(occ.id, *it->second.share);
    }
    return res;
}

const char* issue_kind_name(IssueKind kind) {
    switch (kind) {
        case IssueKind::ShareSumViolation: return "ShareSumViolation";
        case IssueKind::DanglingCrosswalk: return "DanglingCrosswalk";
        case IssueKind::MissingShare: return "MissingShare";
        case IssueKind::NegativeCount: return "NegativeCount";
        case IssueKind::UnknownSector: return "UnknownSector";
    }
    return "?";
}

std::vector<Issue> validate_registry(const Registry& registry) {
    std::vector<Issue> issues;

    auto check_categories = [&](const std::map<std::string, OccupationCategory>& cats) {
        for (const auto& [code, cat] : cats) {
            const std::string subject = std::string(class_system_name(cat.system)) + ":" + code;
            if (cat.share && !cat.share->balanced(kShareTolerance))
                issues.push_back({IssueKind::ShareSumViolation, subject,
                                  "female+male = " +
                                      io::format_double(cat.share->female + cat.share->male)});
            if (cat.employment_count && *cat.employment_count < 0)
                issues.push_back({IssueKind::NegativeCount, subject,
                                  "employment_count = " + std::to_string(*cat.employment_count)});
        }
    };
    check_categories(registry.feor);
    check_categories(registry.soc);

    for (const CrosswalkEntry& e : registry.crosswalk) {
        if (!e.feor_code.empty() && !registry.feor.count(e.feor_code))
            issues.push_back({IssueKind::DanglingCrosswalk, e.feor_code + "->" + e.soc_code,
                              "feor_code not in FEOR categories"});
        if (!e.soc_code.empty() && !registry.soc.count(e.soc_code))
            issues.push_back({IssueKind::DanglingCrosswalk, e.feor_code + "->" + e.soc_code,
                              "soc_code not in SOC categories"});
    }

    // A missing share in the source system blocks the primary reference for a
    // scoreable occupation; SOC share absence is expected suppression and is
    // surfaced through coverage reports instead.
    for (const Occupation& occ : registry.occupations) {
        if (!occ.scoreable()) continue;
        auto it = registry.feor.find(occ.feor_code);
        if (it != registry.feor.end() && !it->second.share)
            issues.push_back({IssueKind::MissingShare, occ.id,
                              "FEOR category " + occ.feor_code + " has no gender share"});
    }
    return issues;
}

std::vector<Sector> load_sectors(const std::filesystem::path& sectors_file) {
    const csv::Table table = csv::read_file(sectors_file, {"sector_id", "name"});
    std::vector<Sector> out;
    std::set<std::string> seen;
    for (const csv::Row& row : table.rows) {
        if (!seen.insert(row.fields[0]).second)
            throw AuditError(ErrorCode::MalformedRow,
                             sectors_file.string() + ": line " + std::to_string(row.line) +
                                 ": duplicate sector_id `" + row.fields[0] + "`");
        out.push_back({row.fields[0], row.fields[1]});
    }
    return out;
}

std::vector<Issue> check_sectors(const Registry& registry, const std::vector<Sector>& sectors) {
    std::set<std::string> known;
    for (const Sector& s : sectors) known.insert(s.id);
    std::vector<Issue> issues;
    for (const Occupation& occ : registry.occupations) {
        if (!known.count(occ.sector_id))
            issues.push_back({IssueKind::UnknownSector, occ.id,
                              "sector_id `" + occ.sector_id + "` not in sectors file"});
    }
    return issues;
}

namespace {

nlohmann::json share_to_json(const std::optional<GenderShare>& share) {
    if (!share) return nullptr;
    return {{"female", share->female}, {"male", share->male}};
}

std::optional<GenderShare> share_from_json(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return GenderShare{j.at("female").get<double>(), j.at("male").get<double>()};
}

nlohmann::json category_to_json(const OccupationCategory& cat) {
    nlohmann::json j{{"code", cat.code},
                     {"system", class_system_name(cat.system)},
                     {"name", cat.name},
                     {"share", share_to_json(cat.share)},
                     {"members", cat.members}};
    j["employment_count"] = cat.employment_count ? nlohmann::json(*cat.employment_count)
                                                 : nlohmann::json(nullptr);
    return j;
}

OccupationCategory category_from_json(const nlohmann::json& j, ClassSystem system) {
    OccupationCategory cat;
    cat.code = j.at("code").get<std::string>();
    cat.system = system;
    cat.name = j.at("name").get<std::string>();
    cat.share = share_from_json(j.at("share"));
    if (!j.at("employment_count").is_null())
        cat.employment_count = j.at("employment_count").get<long long>();
    cat.members = j.at("members").get<std::vector<std::string>>();
    return cat;
}

}  // namespace

nlohmann::json Registry::to_json() const {
    nlohmann::json occs = nlohmann::json::array();
    for (const Occupation& o : occupations) {
        nlohmann::json j{{"id", o.id},
                         {"name_source", o.name_source},
                         {"name_gloss", o.name_gloss},
                         {"feor_code", o.feor_code},
                         {"soc_code", o.soc_code},
                         {"isco_code", o.isco_code},
                         {"sector_id", o.sector_id}};
        if (o.excluded) {
            j["excluded"] = {{"kind", exclusion_kind_name(o.excluded->kind)},
                             {"note", o.excluded->note}};
        } else {
            j["excluded"] = nullptr;
        }
        occs.push_back(std::move(j));
    }
    nlohmann::json feor_json = nlohmann::json::array();
    for (const auto& [code, cat] : feor) feor_json.push_back(category_to_json(cat));
    nlohmann::json soc_json = nlohmann::json::array();
    for (const auto& [code, cat] : soc) soc_json.push_back(category_to_json(cat));
    nlohmann::json xwalk = nlohmann::json::array();
    for (const CrosswalkEntry& e : crosswalk)
        xwalk.push_back({{"feor_code", e.feor_code},
                         {"isco_code", e.isco_code},
                         {"soc_code", e.soc_code},
                         {"override", e.manual_override}});
    return {{"occupations", occs}, {"feor", feor_json}, {"soc", soc_json}, {"crosswalk", xwalk}};
}

Registry Registry::from_json(const nlohmann::json& j) {
    Registry reg;
    for (const auto& jo : j.at("occupations")) {
        Occupation o;
        o.id = jo.at("id").get<std::string>();
        o.name_source = jo.at("name_source").get<std::string>();
        o.name_gloss = jo.at("name_gloss").get<std::string>();
        o.feor_code = jo.at("feor_code").get<std::string>();
        o.soc_code = jo.at("soc_code").get<std::string>();
        o.isco_code = jo.at("isco_code").get<std::string>();
        o.sector_id = jo.at("sector_id").get<std::string>();
        if (!jo.at("excluded").is_null())
            o.excluded = ExclusionRule{parse_exclusion_kind(jo.at("excluded").at("kind")),
                                       jo.at("excluded").at("note").get<std::string>()};
        reg.occupations.push_back(std::move(o));
    }
    for (const auto& jc : j.at("feor")) {
        OccupationCategory cat = category_from_json(jc, ClassSystem::Feor);
        reg.feor.emplace(cat.code, std::move(cat));
    }
    for (const auto& jc : j.at("soc")) {
        OccupationCategory cat = category_from_json(jc, ClassSystem::Soc);
        reg.soc.emplace(cat.code, std::move(cat));
    }
    for (const auto& je : j.at("crosswalk"))
        reg.crosswalk.push_back({je.at("feor_code").get<std::string>(),
                                 je.at("isco_code").get<std::string>(),
                                 je.at("soc_code").get<std::string>(),
                                 je.at("override").get<bool>()});
    return reg;
}

}  // namespace audit
