#pragma once

#include <cmath>
#include <compare>
#include <string>

#include "audit/errors.hpp"

namespace audit {

// Female/male employment (or perception) fractions. Stored as fractions in
// [0,1]; percentages exist only at I/O boundaries.
struct GenderShare {
    double female = 0.0;
    double male = 0.0;

    bool balanced(double tol = 1e-9) const { return std::fabs(female + male - 1.0) <= tol; }
    GenderShare swapped() const { return GenderShare{male, female}; }
};

enum class ReferenceKind { SourceStats, TargetStats, Perception };

inline const char* reference_kind_name(ReferenceKind kind) {
    switch (kind) {
        case ReferenceKind::SourceStats: return "source";
        case ReferenceKind::TargetStats: return "target";
        case ReferenceKind::Perception: return "perception";
    }
    return "?";
}

inline ReferenceKind parse_reference_kind(const std::string& s) {
    if (s == "source") return ReferenceKind::SourceStats;
    if (s == "target") return ReferenceKind::TargetStats;
    if (s == "perception") return ReferenceKind::Perception;
    throw AuditError(ErrorCode::ConfigError, "unknown reference kind `" + s + "`");
}

enum class GenderLabel { Masculine, Feminine, Neutral, Ambiguous, Undetected };

inline const char* gender_label_name(GenderLabel label) {
    switch (label) {
        case GenderLabel::Masculine: return "Masculine";
        case GenderLabel::Feminine: return "Feminine";
        case GenderLabel::Neutral: return "Neutral";
        case GenderLabel::Ambiguous: return "Ambiguous";
        case GenderLabel::Undetected: return "Undetected";
    }
    return "?";
}

inline GenderLabel parse_gender_label(const std::string& s) {
    if (s == "Masculine") return GenderLabel::Masculine;
    if (s == "Feminine") return GenderLabel::Feminine;
    if (s == "Neutral") return GenderLabel::Neutral;
    if (s == "Ambiguous") return GenderLabel::Ambiguous;
    if (s == "Undetected") return GenderLabel::Undetected;
    throw AuditError(ErrorCode::MalformedRow, "unknown gender label `" + s + "`");
}

inline bool scoreable_label(GenderLabel label) {
    return label == GenderLabel::Masculine || label == GenderLabel::Feminine;
}

// Identity of one generated sentence: (occupation, template, adjective).
// adjective_id is empty for base sentences.
struct SentenceKey {
    std::string occupation_id;
    std::string template_id;
    std::string adjective_id;

    auto operator<=>(const SentenceKey&) const = default;
};

}  // namespace audit
