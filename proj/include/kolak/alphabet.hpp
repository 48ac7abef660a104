#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kolak {

using LetterId = int;

/// A letter: dense id within its alphabet plus a display label.
struct Letter {
    LetterId id;
    std::string label;
};

/// A finite word, stored as letter ids of some alphabet. May be empty.
using Word = std::vector<LetterId>;

/// Ordered set of letters with unique labels; ids are 0..size()-1.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    bool contains(LetterId id) const { return id >= 0 && id < size(); }
    const std::string& label(LetterId id) const;
    Letter letter(LetterId id) const { return {id, label(id)}; }

    LetterId id_of(const std::string& label) const; // throws on unknown label
    std::optional<LetterId> find(const std::string& label) const;

    /// Integer value of a numeric label ("4" -> 4); nullopt for non-numeric labels.
    std::optional<long long> numeric_value(LetterId id) const;

    bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::map<std::string, LetterId> index_;
};

void check_word(const Alphabet& alphabet, const Word& w);

/// Concatenated labels when all are single characters, space-joined otherwise.
std::string format_word(const Alphabet& alphabet, const Word& w);

} // namespace kolak
