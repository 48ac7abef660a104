#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "kolak/substitution.hpp"

namespace kolak {

/// Parameters of a generalized Kolakoski sequence Kol(p,q): the sequence over
/// {p,q} starting with p that equals its own run-length sequence.
struct KolParams {
    long long p;
    long long q;

    KolParams(long long p_, long long q_);

    bool even_even() const { return p % 2 == 0 && q % 2 == 0; }
    /// p = 2m, q = 2n; only meaningful for the even-even family.
    long long m() const;
    long long n() const;

    KolParams swapped() const { return KolParams(q, p); }
};

/// Alphabet {p, q} with decimal labels; letter 0 is p, letter 1 is q.
Alphabet kolakoski_alphabet(const KolParams& params);

/// First n letters, produced by run-length self-generation.
Word kolakoski_prefix(const KolParams& params, std::size_t n);

/// Same prefix via the alternating position-parity substitutions
/// (q -> p^q, p -> p^p on even positions; q -> q^q, p -> q^p on odd ones).
/// Requires p >= 2: for p = 1 the iteration from seed p does not expand
/// (Kol(1,q) = 1 Kol(q,1) instead).
Word kolakoski_prefix_by_substitution(const KolParams& params, std::size_t n);

/// (left, right) around the seamline of the bi-infinite extension; the left
/// word is read outward (it is Kol(q,p), i.e. its letters run away from the seam), the right word is Kol(p,q).
std::pair<Word, Word> kolakoski_bi_prefix(const KolParams& params, std::size_t n);

enum class FinalRun { drop, keep };

/// Run lengths of w. The final run is dropped by default since a prefix may
/// truncate it.
std::vector<long long> run_lengths(const Word& w, FinalRun policy = FinalRun::drop);

/// Run lengths mapped back to letters of the alphabet; throws when a run
/// length has no matching numeric label.
Word run_length_encode(const Alphabet& alphabet, const Word& w, FinalRun policy = FinalRun::drop);

struct SelfEncodingReport {
    bool ok;
    std::optional<std::size_t> first_mismatch;
    std::size_t compared;
};

/// Compares the run lengths of w against the numeric letter values of w
/// itself, on the overlap.
SelfEncodingReport compare_self_encoding(const Alphabet& alphabet, const Word& w);

/// Self-encoding check of the length-n prefix of Kol(p,q).
SelfEncodingReport verify_self_encoding(const KolParams& params, std::size_t n);

/// Incremental Kolakoski generator; side selects the right half (Kol(p,q)) or
/// the left half read outward (Kol(q,p)) of the bi-infinite sequence.
class KolakoskiStream {
public:
    enum class Side { right, left };

    explicit KolakoskiStream(KolParams params, Side side = Side::right);
    LetterId next(); // 0 = first letter of the stream's own alphabet
    void reset();
    const Alphabet& alphabet() const { return alphabet_; }

private:
    KolParams params_;
    Alphabet alphabet_;
    std::vector<long long> values_;
    std::size_t run_index_ = 0;
    std::size_t pos_ = 0;
};

/// Four-letter substitution marking position parity: p -> (p p~)^m,
/// p~ -> (q q~)^m, q -> (p p~)^n, q~ -> (q q~)^n over {p, p~, q, q~}.
Substitution parity_substitution(long long m, long long n);

} // namespace kolak
