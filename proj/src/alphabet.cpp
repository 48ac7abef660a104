#include "kolak/alphabet.hpp"

#include <cctype>
#include <stdexcept>

namespace kolak {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("Alphabet: at least one letter required");
    for (int i = 0; i < size(); ++i) {
        if (labels_[i].empty()) throw std::invalid_argument("Alphabet: empty label");
        auto [it, fresh] = index_.emplace(labels_[i], i);
        (void)it;
        if (!fresh) throw std::invalid_argument("Alphabet: duplicate label '" + labels_[i] + "'");
    }
}

const std::string& Alphabet::label(LetterId id) const {
    if (!contains(id)) throw std::invalid_argument("Alphabet: letter id out of range");
    return labels_[id];
}

LetterId Alphabet::id_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::invalid_argument("Alphabet: unknown label '" + label + "'");
    return it->second;
}

std::optional<LetterId> Alphabet::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<long long> Alphabet::numeric_value(LetterId id) const {
    const std::string& s = label(id);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::stoll(s);
}

void check_word(const Alphabet& alphabet, const Word& w) {
    for (LetterId id : w)
        if (!alphabet.contains(id))
            throw std::invalid_argument("word contains letter id " + std::to_string(id) +
                                        " outside alphabet of size " + std::to_string(alphabet.size()));
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
    bool compact = true;
    for (int i = 0; i < alphabet.size(); ++i)
        if (alphabet.label(i).size() != 1) compact = false;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += alphabet.label(w[i]);
    }
    return out;
}

} // namespace kolak
