#ifndef UFNA_PRESENTATION_HPP
#define UFNA_PRESENTATION_HPP

// A finitely presented connected monomial algebra A = k<letters>/(F):
// generators all in degree 1, relations a finite set of forbidden words.
// Words are stored as sequences of generator indices, never as strings,
// so multi-character generator names cannot introduce tokenization
// ambiguity.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ufna/errors.hpp"

namespace ufna {

struct Word {
    std::vector<std::int32_t> letters;

    Word() = default;
    explicit Word(std::vector<std::int32_t> ls) : letters(std::move(ls)) {}

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    // shortlex: by length, then lexicographically by generator index.
    // Within a fixed degree this is the canonical lexicographic basis order.
    std::strong_ordering operator<=>(const Word& rhs) const {
        if (letters.size() != rhs.letters.size())
            return letters.size() <=> rhs.letters.size();
        return std::lexicographical_compare_three_way(
            letters.begin(), letters.end(), rhs.letters.begin(), rhs.letters.end());
    }
    bool operator==(const Word&) const = default;
};

// w restricted to [from, from+len)
Word subword(const Word& w, int from, int len);
// concatenation uv
Word concat(const Word& u, const Word& v);
// true iff f occurs in w as a contiguous factor
bool is_factor(const Word& f, const Word& w);

struct Presentation {
    std::vector<std::string> generators; // distinct names, document order
    std::vector<Word> relations;         // forbidden words
    int d = 0;                           // max relation length - 1, or 0 if none

    int generator_count() const { return static_cast<int>(generators.size()); }
    int find_generator(std::string_view name) const; // -1 if absent
};

// Recomputed invariant, not stored logic: d = (max relation length) - 1.
int derived_d(const std::vector<Word>& relations);

// Canonical JSON input:
//   {"generators":["x","y"],"relations":[["y","x"],["x","x"]]}
// Returns the presentation exactly as written (unnormalized); relations
// keep document order. Throws ParseError on malformed documents, unknown
// or duplicate generators, and empty generator lists.
Presentation parse_presentation(const std::string& text);

// Compact text form, single-character generator names only:
//   gens: x y; rels: yx xx;
Presentation parse_compact(const std::string& text);

// Dispatch on the first non-space byte: '{' means JSON, anything else the
// compact form.
Presentation parse_input(const std::string& text);

// Reduce the relation set to the minimal obstruction antichain:
// duplicates dropped, any relation containing another as a factor
// dropped, length-1 relations eliminated together with their generator
// (and every relation mentioning it), d recomputed. The normal-word
// language is unchanged. Idempotent.
//
// If every generator is eliminated the result has an empty generator
// list: the algebra collapsed to k. That outcome is legal and queryable
// via collapsed_to_scalars(); parse_presentation never produces it.
Presentation normalize(const Presentation& p);

inline bool collapsed_to_scalars(const Presentation& p) { return p.generators.empty(); }

// Display form: generator names concatenated when all are single
// characters, dot-joined otherwise. The empty word prints as "1".
std::string word_string(const Presentation& p, const Word& w);

// Inverse convenience for tests and the compact parser: every character
// must name a generator.
Word make_word(const Presentation& p, std::string_view text);

} // namespace ufna

#endif
