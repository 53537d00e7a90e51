#include "audit/sentences.hpp"

#include <algorithm>
#include <set>

#include "audit/csv.hpp"

namespace audit {

namespace {

constexpr std::string_view kOccSlot = "{occ}";
constexpr std::string_view kAdjSlot = "{adj}";

std::size_t count_occurrences(const std::string& s, std::string_view needle) {
    std::size_t n = 0;
    for (std::size_t pos = s.find(needle); pos != std::string::npos;
         pos = s.find(needle, pos + needle.size()))
        ++n;
    return n;
}

void replace_once(std::string& s, std::string_view slot, const std::string& value) {
    const std::size_t pos = s.find(slot);
    s.replace(pos, slot.size(), value);
}

// Uppercase detection for the leading code point: ASCII plus the Hungarian
// accented vowels that can start a template.
bool starts_uppercase(const std::string& s) {
    if (s.empty()) return false;
    if (s[0] >= 'A' && s[0] <= 'Z') return true;
    static const char* kUpper[] = {"Á", "É", "Í", "Ó", "Ö", "Ő", "Ú", "Ü", "Ű"};
    for (const char* u : kUpper)
        if (s.rfind(u, 0) == 0) return true;
    return false;
}

bool contains_word(const std::string& s, const std::string& word) {
    std::size_t pos = 0;
    while ((pos = s.find(word, pos)) != std::string::npos) {
        const bool left_ok = pos == 0 || s[pos - 1] == ' ';
        const std::size_t end = pos + word.size();
        const bool right_ok = end == s.size() || s[end] == ' ';
        if (left_ok && right_ok) return true;
        pos = end;
    }
    return false;
}

}  // namespace

SentenceTemplate SentenceTemplate::make(std::string id, std::string pattern) {
    SentenceTemplate t;
    t.id = std::move(id);
    t.pattern = std::move(pattern);
    if (count_occurrences(t.pattern, kOccSlot) != 1)
        throw AuditError(ErrorCode::PlaceholderMismatch,
                         "template `" + t.id + "` must contain exactly one {occ}");
    const std::size_t adj_slots = count_occurrences(t.pattern, kAdjSlot);
    if (adj_slots > 1)
        throw AuditError(ErrorCode::PlaceholderMismatch,
                         "template `" + t.id + "` has more than one {adj}");
    t.has_adjective_slot = adj_slots == 1;
    t.capitalized = starts_uppercase(t.pattern);
    t.article_present = contains_word(t.pattern, "egy");
    return t;
}

SentenceUnit render(const Occupation& occupation, const SentenceTemplate& tmpl,
                    const AdjectiveVariant* adjective) {
    if (tmpl.has_adjective_slot != (adjective != nullptr))
        throw AuditError(ErrorCode::PlaceholderMismatch,
                         "template `" + tmpl.id + "`: adjective " +
                             (adjective ? "given but no {adj} slot" : "required by {adj} slot"));

    std::string text = tmpl.pattern;
    replace_once(text, kOccSlot, occupation.name_source);
    if (adjective) replace_once(text, kAdjSlot, adjective->text);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.pop_back();

    SentenceUnit unit;
    unit.key = SentenceKey{occupation.id, tmpl.id, adjective ? adjective->id : std::string{}};
    unit.source_text = std::move(text);
    return unit;
}

std::vector<SentenceUnit> generate_corpus(const Registry& registry,
                                          std::span<const SentenceTemplate> templates,
                                          std::span<const AdjectiveVariant> adjectives) {
    std::vector<const SentenceTemplate*> ordered_templates;
    for (const SentenceTemplate& t : templates) ordered_templates.push_back(&t);
    std::sort(ordered_templates.begin(), ordered_templates.end(),
              [](const SentenceTemplate* a, const SentenceTemplate* b) { return a->id < b->id; });

    std::vector<const AdjectiveVariant*> ordered_adjectives;
    for (const AdjectiveVariant& a : adjectives) ordered_adjectives.push_back(&a);
    std::sort(ordered_adjectives.begin(), ordered_adjectives.end(),
              [](const AdjectiveVariant* a, const AdjectiveVariant* b) { return a->id < b->id; });

    std::vector<SentenceUnit> corpus;
    for (const Occupation& occ : registry.occupations) {
        if (!occ.scoreable()) continue;
        for (const SentenceTemplate* tmpl : ordered_templates) {
            if (!tmpl->has_adjective_slot) {
                corpus.push_back(render(occ, *tmpl));
            } else {
                for (const AdjectiveVariant* adj : ordered_adjectives)
                    corpus.push_back(render(occ, *tmpl, adj));
            }
        }
    }
    return corpus;
}

std::vector<SentenceTemplate> load_templates(const std::filesystem::path& templates_file) {
    const csv::Table table = csv::read_file(templates_file, {"id", "pattern"});
    std::vector<SentenceTemplate> out;
    std::set<std::string> seen;
    for (const csv::Row& row : table.rows) {
        if (!seen.insert(row.fields[0]).second)
            throw AuditError(ErrorCode::MalformedRow,
                             templates_file.string() + ": line " + std::to_string(row.line) +
                                 ": duplicate template id `" + row.fields[0] + "`");
        out.push_back(SentenceTemplate::make(row.fields[0], row.fields[1]));
    }
    return out;
}

std::vector<AdjectiveVariant> load_adjectives(const std::filesystem::path& adjectives_file) {
    const csv::Table table =
        csv::read_file(adjectives_file, {"id", "text", "polarity", "intensified"});
    std::vector<AdjectiveVariant> out;
    std::set<std::string> seen;
    for (const csv::Row& row : table.rows) {
        const std::string where =
            adjectives_file.string() + ": line " + std::to_string(row.line);
        if (!seen.insert(row.fields[0]).second)
            throw AuditError(ErrorCode::MalformedRow,
                             where + ": duplicate adjective id `" + row.fields[0] + "`");
        AdjectiveVariant adj;
        adj.id = row.fields[0];
        adj.text = row.fields[1];
        if (adj.text.empty())
            throw AuditError(ErrorCode::MalformedRow, where + ": empty adjective text");
        if (row.fields[2] == "positive") adj.polarity = Polarity::Positive;
        else if (row.fields[2] == "negative") adj.polarity = Polarity::Negative;
        else
            throw AuditError(ErrorCode::MalformedRow,
                             where + ": polarity must be positive or negative");
        if (row.fields[3] != "0" && row.fields[3] != "1")
            throw AuditError(ErrorCode::MalformedRow, where + ": intensified must be 0 or 1");
        adj.intensified = row.fields[3] == "1";
        out.push_back(std::move(adj));
    }
    return out;
}

}  // namespace audit
