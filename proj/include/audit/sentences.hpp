#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "audit/registry.hpp"
#include "audit/types.hpp"

namespace audit {

struct SentenceTemplate {
    std::string id;
    std::string pattern;           // exactly one {occ}, optional {adj}
    bool capitalized = false;      // derived: pattern starts with an uppercase letter
    bool article_present = false;  // derived: pattern contains the article word
    bool has_adjective_slot = false;

    static SentenceTemplate make(std::string id, std::string pattern);
};

enum class Polarity { Positive, Negative };

struct AdjectiveVariant {
    std::string id;
    std::string text;  // source-language phrase, e.g. "nagyon jó"
    Polarity polarity = Polarity::Positive;
    bool intensified = false;
};

struct SentenceUnit {
    SentenceKey key;
    std::string source_text;
};

// Substitutes the occupation (and adjective) into the pattern. The adjective
// must be given iff the pattern has an {adj} slot; PlaceholderMismatch
// otherwise. Output carries no trailing whitespace.
SentenceUnit render(const Occupation& occupation, const SentenceTemplate& tmpl,
                    const AdjectiveVariant* adjective = nullptr);

// One base unit per adjective-free template plus one unit per (adjective,
// adjective-capable template), for every non-excluded occupation. Order is
// (occupation_id, template_id, adjective_id) ascending.
std::vector<SentenceUnit> generate_corpus(const Registry& registry,
                                          std::span<const SentenceTemplate> templates,
                                          std::span<const AdjectiveVariant> adjectives);

std::vector<SentenceTemplate> load_templates(const std::filesystem::path& templates_file);
std::vector<AdjectiveVariant> load_adjectives(const std::filesystem::path& adjectives_file);

}  // namespace audit
