#include "audit/gendering.hpp"

#include <cctype>

#include "audit/csv.hpp"

namespace audit {

void PronounLexicon::add(std::string token, char gender, TokenTier tier) {
    entries_[std::move(token)] = Entry{gender, tier};
}

const PronounLexicon::Entry* PronounLexicon::find(const std::string& token) const {
    auto it = entries_.find(token);
    return it == entries_.end() ? nullptr : &it->second;
}

PronounLexicon PronounLexicon::default_english() {
    PronounLexicon lex;
    for (const char* t : {"he", "he's", "him", "himself"}) lex.add(t, 'M', TokenTier::Subject);
    for (const char* t : {"she", "she's", "her", "herself"}) lex.add(t, 'F', TokenTier::Subject);
    for (const char* t : {"it", "it's", "they", "they're", "them"})
        lex.add(t, 'N', TokenTier::Subject);
    lex.add("his", 'M', TokenTier::Possessive);
    lex.add("hers", 'F', TokenTier::Possessive);
    lex.add("their", 'N', TokenTier::Possessive);
    lex.add("theirs", 'N', TokenTier::Possessive);
    return lex;
}

PronounLexicon PronounLexicon::load(const std::filesystem::path& lexicon_file) {
    csv::Table table = csv::read_file(lexicon_file);
    const bool has_tier = table.header.size() == 3;
    if (!(table.header == std::vector<std::string>{"token", "gender"} ||
          table.header == std::vector<std::string>{"token", "gender", "tier"}))
        throw AuditError(ErrorCode::MalformedRow,
                         lexicon_file.string() + ": header must be token,gender[,tier]");
    PronounLexicon lex;
    for (const csv::Row& row : table.rows) {
        const std::string where =
            lexicon_file.string() + ": line " + std::to_string(row.line);
        const std::string& g = row.fields[1];
        if (g != "M" && g != "F" && g != "N")
            throw AuditError(ErrorCode::MalformedRow, where + ": gender must be M, F or N");
        TokenTier tier = TokenTier::Subject;
        if (has_tier && !row.fields[2].empty()) {
            if (row.fields[2] == "subject") tier = TokenTier::Subject;
            else if (row.fields[2] == "possessive") tier = TokenTier::Possessive;
            else
                throw AuditError(ErrorCode::MalformedRow,
                                 where + ": tier must be subject or possessive");
        }
        lex.add(row.fields[0], g[0], tier);
    }
    return lex;
}

namespace {

bool token_char(unsigned char c) {
    return std::isalnum(c) || c == '\'' || c >= 0x80;  // keep UTF-8 bytes intact
}

struct GenderHits {
    bool m = false;
    bool f = false;
    bool n = false;

    void record(char gender) {
        if (gender == 'M') m = true;
        else if (gender == 'F') f = true;
        else n = true;
    }
};

}  // namespace

GenderLabel classify(std::string_view target_text, const PronounLexicon& lexicon) {
    GenderHits subject;
    GenderHits possessive;

    std::string token;
    auto flush = [&](std::string& tok) {
        // punctuation splits tokens; apostrophes may still trail ("hers'")
        while (!tok.empty() && tok.back() == '\'') tok.pop_back();
        while (!tok.empty() && tok.front() == '\'') tok.erase(tok.begin());
        if (tok.empty()) return;
        if (const PronounLexicon::Entry* e = lexicon.find(tok)) {
            (e->tier == TokenTier::Subject ? subject : possessive).record(e->gender);
        }
        tok.clear();
    };

    for (unsigned char c : target_text) {
        if (token_char(c)) {
            token.push_back(static_cast<char>(std::tolower(c)));
        } else {
            flush(token);
        }
    }
    flush(token);

    if (subject.m && subject.f) return GenderLabel::Ambiguous;
    if (subject.m) return GenderLabel::Masculine;
    if (subject.f) return GenderLabel::Feminine;
    if (subject.n) return GenderLabel::Neutral;
    // no subject pronoun: possessives decide
    if (possessive.m && possessive.f) return GenderLabel::Ambiguous;
    if (possessive.m) return GenderLabel::Masculine;
    if (possessive.f) return GenderLabel::Feminine;
    if (possessive.n) return GenderLabel::Neutral;
    return GenderLabel::Undetected;
}

GenderLabel classify(std::string_view target_text) {
    static const PronounLexicon lexicon = PronounLexicon::default_english();
    return classify(target_text, lexicon);
}

ClassifiedCorpus classify_corpus(std::span<const std::pair<SentenceKey, std::string>> records,
                                 const PronounLexicon& lexicon) {
    ClassifiedCorpus out;
    for (const auto& [key, text] : records) {
        const GenderLabel label = classify(text, lexicon);
        out.labels.emplace(key, label);
        ++out.counts[static_cast<std::size_t>(label)];
    }
    return out;
}

}  // namespace audit
