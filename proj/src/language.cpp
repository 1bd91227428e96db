#include "ufna/language.hpp"

#include <algorithm>

namespace ufna {

bool is_normal(const Word& w, const Presentation& p) {
    for (const Word& r : p.relations)
        if (is_factor(r, w)) return false;
    return true;
}

namespace {

// w stayed normal after appending its last letter iff no relation is a
// suffix of it ending at the new position; all other factors lie in the
// normal prefix.
bool suffix_hits_relation(const Word& w, const Presentation& p) {
    for (const Word& r : p.relations) {
        const int L = r.length();
        if (L > w.length() || L == 0) continue;
        if (std::equal(r.letters.begin(), r.letters.end(), w.letters.end() - L))
            return true;
    }
    return false;
}

} // namespace

DegreeBasis normal_words(int n, const Presentation& p, std::uint64_t cap) {
    const int g = p.generator_count();
    std::vector<Word> level{Word{}};
    for (int depth = 0; depth < n; ++depth) {
        std::vector<Word> next;
        for (const Word& w : level) {
            for (std::int32_t a = 0; a < g; ++a) {
                Word cand = w;
                cand.letters.push_back(a);
                if (suffix_hits_relation(cand, p)) continue;
                if (next.size() >= cap)
                    throw ResourceCapError("normal word count at degree " + std::to_string(depth + 1), cap);
                next.push_back(std::move(cand));
            }
        }
        level = std::move(next);
    }
    // extension in letter order preserves lexicographic order level by level
    return DegreeBasis{n, std::move(level)};
}

namespace {

mpz_class count_rec(Word& w, int remaining, const Presentation& p, std::uint64_t cap,
                    mpz_class& seen) {
    // counts every node visited, not just leaves, so the cap also bounds time
    if (++seen > cap) throw ResourceCapError("normal word count", cap);
    if (remaining == 0) return 1;
    mpz_class total = 0;
    for (std::int32_t a = 0; a < p.generator_count(); ++a) {
        w.letters.push_back(a);
        if (!suffix_hits_relation(w, p)) total += count_rec(w, remaining - 1, p, cap, seen);
        w.letters.pop_back();
    }
    return total;
}

} // namespace

mpz_class count_normal_words(int n, const Presentation& p, std::uint64_t cap) {
    Word w;
    mpz_class seen = 0;
    return count_rec(w, n, p, cap, seen);
}

namespace {

void extend_rec(Word& w, int remaining, const Presentation& p, std::uint64_t cap,
                std::vector<Word>& out, int base_len) {
    if (remaining == 0) {
        if (out.size() >= cap) throw ResourceCapError("right extension count", cap);
        out.push_back(subword(w, base_len, w.length() - base_len));
        return;
    }
    for (std::int32_t a = 0; a < p.generator_count(); ++a) {
        w.letters.push_back(a);
        if (!suffix_hits_relation(w, p)) extend_rec(w, remaining - 1, p, cap, out, base_len);
        w.letters.pop_back();
    }
}

bool extend_probe(Word& w, int remaining, const Presentation& p) {
    if (remaining == 0) return true;
    for (std::int32_t a = 0; a < p.generator_count(); ++a) {
        w.letters.push_back(a);
        const bool ok = !suffix_hits_relation(w, p) && extend_probe(w, remaining - 1, p);
        w.letters.pop_back();
        if (ok) return true;
    }
    return false;
}

} // namespace

std::vector<Word> right_extensions(const Word& w, int m, const Presentation& p, std::uint64_t cap) {
    if (!is_normal(w, p)) return {};
    Word work = w;
    std::vector<Word> out;
    extend_rec(work, m, p, cap, out, w.length());
    return out;
}

bool has_right_extension(const Word& w, int m, const Presentation& p) {
    if (!is_normal(w, p)) return false;
    Word work = w;
    return extend_probe(work, m, p);
}

} // namespace ufna
