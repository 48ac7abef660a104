#include "kolak/kolakoski.hpp"

#include <stdexcept>
#include <string>

namespace kolak {

KolParams::KolParams(long long p_, long long q_) : p(p_), q(q_) {
    if (p < 1 || q < 1) throw std::invalid_argument("KolParams: letters must be positive");
    if (p == q) throw std::invalid_argument("KolParams: p != q required");
}

long long KolParams::m() const {
    if (!even_even()) throw std::invalid_argument("KolParams: p is odd, no m");
    return p / 2;
}

long long KolParams::n() const {
    if (!even_even()) throw std::invalid_argument("KolParams: q is odd, no n");
    return q / 2;
}

Alphabet kolakoski_alphabet(const KolParams& params) {
    return Alphabet({std::to_string(params.p), std::to_string(params.q)});
}

Word kolakoski_prefix(const KolParams& params, std::size_t n) {
    Word out;
    out.reserve(n);
    const long long values[2] = {params.p, params.q};
    std::size_t run = 0;
    while (out.size() < n) {
        const LetterId letter = static_cast<LetterId>(run % 2);
        // When the reader catches the writer, the run length is the run's own
        // first letter.
        const long long len = run < out.size() ? values[out[run]] : values[letter];
        for (long long i = 0; i < len && out.size() < n; ++i) out.push_back(letter);
        ++run;
    }
    return out;
}

Word kolakoski_prefix_by_substitution(const KolParams& params, std::size_t n) {
    if (params.p < 2)
        throw std::invalid_argument("kolakoski_prefix_by_substitution: p >= 2 required (seed does not expand)");
    // Letter 0 = p, letter 1 = q. Images depend on the position parity of the
    // source letter.
    const auto image = [&](LetterId letter, bool even_pos) -> Word {
        const long long count = letter == 0 ? params.p : params.q;
        const LetterId target = even_pos ? 0 : 1;
        return Word(static_cast<std::size_t>(count), target);
    };
    Word w{0};
    while (w.size() < n) {
        Word next;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Word img = image(w[i], i % 2 == 0);
            next.insert(next.end(), img.begin(), img.end());
        }
        if (next.size() == w.size()) throw std::domain_error("kolakoski_prefix_by_substitution: no growth");
        w.swap(next);
    }
    w.resize(n);
    return w;
}

std::pair<Word, Word> kolakoski_bi_prefix(const KolParams& params, std::size_t n) {
    // The left half, read outward from the seamline, is Kol(q,p). Its letters
    // are remapped into the {p,q} alphabet of the right half.
    Word right = kolakoski_prefix(params, n);
    Word left_raw = kolakoski_prefix(params.swapped(), n);
    Word left;
    left.reserve(left_raw.size());
    for (LetterId id : left_raw) left.push_back(id == 0 ? 1 : 0);
    return {std::move(left), std::move(right)};
}

std::vector<long long> run_lengths(const Word& w, FinalRun policy) {
    if (w.empty()) throw std::invalid_argument("run_lengths: empty word");
    std::vector<long long> out;
    long long len = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) {
            ++len;
        } else {
            out.push_back(len);
            len = 1;
        }
    }
    if (policy == FinalRun::keep) out.push_back(len);
    return out;
}

Word run_length_encode(const Alphabet& alphabet, const Word& w, FinalRun policy) {
    std::vector<long long> lens = run_lengths(w, policy);
    Word out;
    out.reserve(lens.size());
    for (long long len : lens) {
        std::optional<LetterId> id = alphabet.find(std::to_string(len));
        if (!id)
            throw std::invalid_argument("run_length_encode: run length " + std::to_string(len) +
                                        " is not a letter of the alphabet");
        out.push_back(*id);
    }
    return out;
}

SelfEncodingReport compare_self_encoding(const Alphabet& alphabet, const Word& w) {
    std::vector<long long> lens = run_lengths(w, FinalRun::drop);
    const std::size_t overlap = std::min(lens.size(), w.size());
    for (std::size_t i = 0; i < overlap; ++i) {
        std::optional<long long> v = alphabet.numeric_value(w[i]);
        if (!v || *v != lens[i]) return {false, i, overlap};
    }
    return {true, std::nullopt, overlap};
}

SelfEncodingReport verify_self_encoding(const KolParams& params, std::size_t n) {
    Alphabet alphabet = kolakoski_alphabet(params);
    Word w = kolakoski_prefix(params, n);
    return compare_self_encoding(alphabet, w);
}

KolakoskiStream::KolakoskiStream(KolParams params, Side side)
    : params_(side == Side::right ? params : params.swapped()),
      alphabet_(kolakoski_alphabet(params_)) {}

LetterId KolakoskiStream::next() {
    const long long letter_values[2] = {params_.p, params_.q};
    while (pos_ >= values_.size()) {
        const LetterId letter = static_cast<LetterId>(run_index_ % 2);
        const long long len =
            run_index_ < values_.size() ? values_[run_index_] : letter_values[letter];
        for (long long i = 0; i < len; ++i) values_.push_back(letter_values[letter]);
        ++run_index_;
    }
    const long long v = values_[pos_++];
    return v == params_.p ? 0 : 1;
}

void KolakoskiStream::reset() {
    values_.clear();
    run_index_ = 0;
    pos_ = 0;
}

Substitution parity_substitution(long long m, long long n) {
    if (n < 1 || m <= n) throw std::invalid_argument("parity_substitution: m > n >= 1 required");
    const std::string p = std::to_string(2 * m);
    const std::string q = std::to_string(2 * n);
    Alphabet a({p, p + "~", q, q + "~"});
    const auto pair_word = [](LetterId first, long long count) {
        Word w;
        for (long long i = 0; i < count; ++i) {
            w.push_back(first);
            w.push_back(first + 1);
        }
        return w;
    };
    std::vector<Word> rules{
        pair_word(0, m), // p      -> (p p~)^m
        pair_word(2, m), // p~     -> (q q~)^m
        pair_word(0, n), // q      -> (p p~)^n
        pair_word(2, n), // q~     -> (q q~)^n
    };
    return Substitution(std::move(a), std::move(rules),
                        "parity_" + std::to_string(2 * m) + "_" + std::to_string(2 * n));
}

} // namespace kolak
