#pragma once

#include <map>
#include <string>

#include "audit/types.hpp"

namespace audit {

// Bias score B = (E_t - E_o) / E_o. When E_o is zero and the engine still
// errs, B has no finite value; that case carries the distinguished Unbounded
// marker instead of an arbitrary cap.
struct BiasScore {
    double value = 0.0;
    bool unbounded = false;

    static BiasScore finite(double v) { return BiasScore{v, false}; }
    static BiasScore unbounded_marker() { return BiasScore{0.0, true}; }
};

enum class BiasDirection { AgainstWomen, AgainstMen, None };

inline const char* bias_direction_name(BiasDirection d) {
    switch (d) {
        case BiasDirection::AgainstWomen: return "AgainstWomen";
        case BiasDirection::AgainstMen: return "AgainstMen";
        case BiasDirection::None: return "None";
    }
    return "?";
}

struct BiasResult {
    std::string occupation_id;
    ReferenceKind reference = ReferenceKind::SourceStats;
    GenderLabel label = GenderLabel::Masculine;
    double error_points = 0.0;   // E_t, percentage points in [0,100]
    double optimal_error = 0.0;  // E_o, percentage points in [0,50]
    BiasScore bias;
    BiasDirection direction = BiasDirection::None;
};

// E_t: share of employees the chosen pronoun fails to represent, in
// percentage points. Throws UnscorableLabel for non-gendered labels.
double error_points(GenderLabel label, const GenderShare& share);

// E_o: the smallest error achievable by a deterministic translator,
// 100 * min(female, male).
double optimal_error(const GenderShare& share);

// Throws InvalidOrder when e_t < e_o (beyond rounding noise).
BiasScore bias_score(double e_t, double e_o);

BiasResult score_occupation(const std::string& occupation_id, GenderLabel label,
                            const std::map<std::string, GenderShare>& reference,
                            ReferenceKind kind);

// Expected error of the optimal probabilistic translator (outputs the
// feminine pronoun with probability equal to the female share):
// 200 * female * male percentage points. Analysis utility; not part of B.
double probabilistic_expected_error(const GenderShare& share);

}  // namespace audit
