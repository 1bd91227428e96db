#ifndef UFNA_LANGUAGE_HPP
#define UFNA_LANGUAGE_HPP

// The normal-word language of a monomial algebra, by brute force: a word
// is normal iff no relation occurs in it as a contiguous factor, and the
// normal words of length n form the canonical basis of A_n. This module
// is the ground truth the graph-based machinery is checked against, so
// it stays deliberately naive.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ufna/presentation.hpp"

namespace ufna {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

struct DegreeBasis {
    int degree = 0;
    std::vector<Word> words; // sorted, exactly the normal words of this length
};

// Naive factor scan against every relation; the test oracle everywhere.
bool is_normal(const Word& w, const Presentation& p);

// All normal words of length n in lexicographic order. Enumerates by
// right extension (the language is factor-closed, so every prefix of a
// normal word is normal); each step checks only the suffixes a new last
// letter can create. Throws ResourceCapError if any level outgrows cap.
DegreeBasis normal_words(int n, const Presentation& p, std::uint64_t cap = kDefaultCap);

// dim_k A_n without materializing the basis (depth-first count, O(n)
// memory); agrees with normal_words(n).words.size().
mpz_class count_normal_words(int n, const Presentation& p, std::uint64_t cap = kDefaultCap);

// All words u of length m with w.u normal, in lexicographic order.
// A non-normal w has none.
std::vector<Word> right_extensions(const Word& w, int m, const Presentation& p,
                                   std::uint64_t cap = kDefaultCap);

// Emptiness probe for right_extensions, exiting at the first witness.
bool has_right_extension(const Word& w, int m, const Presentation& p);

} // namespace ufna

#endif
