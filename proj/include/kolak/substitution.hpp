#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kolak/alphabet.hpp"
#include "kolak/matrix.hpp"

namespace kolak {

/// A substitution (morphism): one nonempty image word per letter, extended to
/// words by concatenation.
class Substitution {
public:
    Substitution(Alphabet alphabet, std::vector<Word> rules, std::string name = "");

    const Alphabet& alphabet() const { return alphabet_; }
    int size() const { return alphabet_.size(); }
    const Word& rule(LetterId id) const;
    const std::vector<Word>& rules() const { return rules_; }
    const std::string& name() const { return name_; }

    /// Image of w under the morphism (concatenated rule images).
    Word apply(const Word& w) const;

    bool operator==(const Substitution& other) const {
        return alphabet_ == other.alphabet_ && rules_ == other.rules_;
    }

private:
    Alphabet alphabet_;
    std::vector<Word> rules_;
    std::string name_;
};

/// sub(other(.)) over a shared alphabet.
Substitution compose(const Substitution& sub, const Substitution& other);

/// M_ij = occurrences of j in rule(i).
IntMatrix substitution_matrix(const Substitution& sub);

std::vector<long long> lengths(const Substitution& sub);
std::optional<long long> constant_length(const Substitution& sub);

bool is_primitive(const Substitution& sub);

/// rule(seed) starts with seed, so iterating from seed converges to a
/// one-sided fixed point.
bool is_prefix_stable(const Substitution& sub, LetterId seed);

/// Smallest prefix-stable seed whose rule expands (throws if none exists).
LetterId first_stable_seed(const Substitution& sub);

/// First n letters of the one-sided fixed point from a prefix-stable seed.
Word fixed_point_prefix(const Substitution& sub, LetterId seed, std::size_t n);

/// Column walk: successively x <- rule(x)[d] for d in digits (most
/// significant digit of the column index first).
LetterId walk(const Substitution& sub, LetterId start, std::span<const int> digits);

/// Renames `from` to `into` in every image and drops `from` from the
/// alphabet; requires identical rule images for the two letters.
Substitution merge_letters(const Substitution& sub, LetterId from, LetterId into);

/// On-demand letters of a fixed point; restarting yields the same stream.
class FixedPointStream {
public:
    FixedPointStream(Substitution sub, LetterId seed);
    LetterId next();
    void reset();

private:
    void grow();
    Substitution sub_;
    LetterId seed_;
    Word buffer_;
    std::size_t pos_ = 0;
};

} // namespace kolak
