#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "audit/types.hpp"

namespace audit {

enum class TokenTier { Subject, Possessive };

// Token -> gender lexicon driving the rule-based classifier. Data-driven so
// other target languages can be added without code changes.
class PronounLexicon {
public:
    struct Entry {
        char gender = 'N';  // 'M', 'F' or 'N'
        TokenTier tier = TokenTier::Subject;
    };

    void add(std::string token, char gender, TokenTier tier);
    const Entry* find(const std::string& token) const;

    static PronounLexicon default_english();
    // pronoun_lexicon.csv: token,gender[,tier]; gender in {M,F,N}, tier in
    // {subject,possessive} defaulting to subject.
    static PronounLexicon load(const std::filesystem::path& lexicon_file);

private:
    std::map<std::string, Entry> entries_;
};

// Tokenizes on whitespace/punctuation (apostrophes stay inside tokens),
// lowercases, and inspects pronoun tokens. Conflicting masculine and feminine
// tokens yield Ambiguous; possessive-tier tokens count only when no
// subject-tier pronoun is present; no pronoun at all yields Undetected.
GenderLabel classify(std::string_view target_text, const PronounLexicon& lexicon);
GenderLabel classify(std::string_view target_text);

struct ClassifiedCorpus {
    std::map<SentenceKey, GenderLabel> labels;
    // counts indexed by GenderLabel order: Masculine, Feminine, Neutral,
    // Ambiguous, Undetected.
    std::array<std::size_t, 5> counts{};
};

ClassifiedCorpus classify_corpus(std::span<const std::pair<SentenceKey, std::string>> records,
                                 const PronounLexicon& lexicon);

}  // namespace audit
