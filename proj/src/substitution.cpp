#include "kolak/substitution.hpp"

#include <stdexcept>

namespace kolak {

Substitution::Substitution(Alphabet alphabet, std::vector<Word> rules, std::string name)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), name_(std::move(name)) {
    if (static_cast<int>(rules_.size()) != alphabet_.size())
        throw std::invalid_argument("Substitution: one rule per letter required");
    for (const Word& r : rules_) {
        if (r.empty()) throw std::invalid_argument("Substitution: empty rule image");
        check_word(alphabet_, r);
    }
}

const Word& Substitution::rule(LetterId id) const {
    if (!alphabet_.contains(id)) throw std::invalid_argument("Substitution: unknown letter id");
    return rules_[id];
}

Word Substitution::apply(const Word& w) const {
    check_word(alphabet_, w);
    Word out;
    std::size_t total = 0;
    for (LetterId id : w) total += rule(id).size();
    out.reserve(total);
    for (LetterId id : w) {
        const Word& img = rule(id);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Substitution compose(const Substitution& sub, const Substitution& other) {
    if (!(sub.alphabet() == other.alphabet()))
        throw std::invalid_argument("compose: alphabets differ");
    std::vector<Word> rules;
    rules.reserve(sub.size());
    for (int i = 0; i < sub.size(); ++i) rules.push_back(sub.apply(other.rule(i)));
    return Substitution(sub.alphabet(), std::move(rules), sub.name() + "*" + other.name());
}

IntMatrix substitution_matrix(const Substitution& sub) {
    IntMatrix m(sub.size());
    for (int i = 0; i < sub.size(); ++i)
        for (LetterId j : sub.rule(i)) ++m.at(i, j);
    return m;
}

std::vector<long long> lengths(const Substitution& sub) {
    std::vector<long long> out(sub.size());
    for (int i = 0; i < sub.size(); ++i) out[i] = static_cast<long long>(sub.rule(i).size());
    return out;
}

std::optional<long long> constant_length(const Substitution& sub) {
    auto ls = lengths(sub);
    for (long long l : ls)
        if (l != ls[0]) return std::nullopt;
    return ls[0];
}

bool is_primitive(const Substitution& sub) {
    return is_primitive_matrix(substitution_matrix(sub));
}

bool is_prefix_stable(const Substitution& sub, LetterId seed) {
    if (!sub.alphabet().contains(seed)) throw std::invalid_argument("is_prefix_stable: unknown seed");
    return sub.rule(seed).front() == seed;
}

LetterId first_stable_seed(const Substitution& sub) {
    for (int i = 0; i < sub.size(); ++i)
        if (is_prefix_stable(sub, i) && sub.rule(i).size() > 1) return i;
    throw std::invalid_argument("first_stable_seed: no expanding prefix-stable seed");
}

Word fixed_point_prefix(const Substitution& sub, LetterId seed, std::size_t n) {
    if (!sub.alphabet().contains(seed)) throw std::invalid_argument("fixed_point_prefix: unknown seed");
    if (!is_prefix_stable(sub, seed))
        throw std::invalid_argument("fixed_point_prefix: rule(" + sub.alphabet().label(seed) +
                                    ") does not start with " + sub.alphabet().label(seed) +
                                    " (seed not prefix-stable)");
    Word w{seed};
    while (w.size() < n) {
        Word next = sub.apply(w);
        if (next.size() == w.size())
            throw std::domain_error("fixed_point_prefix: fixed point stays shorter than requested");
        w.swap(next);
    }
    w.resize(n);
    return w;
}

LetterId walk(const Substitution& sub, LetterId start, std::span<const int> digits) {
    LetterId x = start;
    for (int d : digits) {
        const Word& img = sub.rule(x);
        if (d < 0 || d >= static_cast<int>(img.size()))
            throw std::out_of_range("walk: digit outside rule image");
        x = img[d];
    }
    return x;
}

Substitution merge_letters(const Substitution& sub, LetterId from, LetterId into) {
    if (from == into) throw std::invalid_argument("merge_letters: identical letters");
    if (!(sub.rule(from) == sub.rule(into)))
        throw std::invalid_argument("merge_letters: rule images differ");
    const Alphabet& a = sub.alphabet();
    std::vector<std::string> labels;
    std::vector<int> remap(a.size(), -1);
    for (int i = 0; i < a.size(); ++i) {
        if (i == from) continue;
        remap[i] = static_cast<int>(labels.size());
        labels.push_back(a.label(i));
    }
    remap[from] = remap[into];
    std::vector<Word> rules;
    for (int i = 0; i < a.size(); ++i) {
        if (i == from) continue;
        Word img;
        img.reserve(sub.rule(i).size());
        for (LetterId x : sub.rule(i)) img.push_back(remap[x]);
        rules.push_back(std::move(img));
    }
    return Substitution(Alphabet(std::move(labels)), std::move(rules), sub.name() + "-reduced");
}

FixedPointStream::FixedPointStream(Substitution sub, LetterId seed)
    : sub_(std::move(sub)), seed_(seed) {
    if (!is_prefix_stable(sub_, seed_))
        throw std::invalid_argument("FixedPointStream: seed not prefix-stable");
    buffer_ = {seed_};
}

LetterId FixedPointStream::next() {
    while (pos_ >= buffer_.size()) grow();
    return buffer_[pos_++];
}

void FixedPointStream::grow() {
    Word next = sub_.apply(buffer_);
    if (next.size() == buffer_.size())
        throw std::domain_error("FixedPointStream: fixed point does not grow");
    buffer_.swap(next);
}

void FixedPointStream::reset() {
    buffer_ = {seed_};
    pos_ = 0;
}

} // namespace kolak
