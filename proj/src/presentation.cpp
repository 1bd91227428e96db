#include "ufna/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

namespace ufna {

Word subword(const Word& w, int from, int len) {
    Word out;
    out.letters.assign(w.letters.begin() + from, w.letters.begin() + from + len);
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
    return out;
}

bool is_factor(const Word& f, const Word& w) {
    if (f.length() > w.length()) return false;
    if (f.empty()) return true;
    return std::search(w.letters.begin(), w.letters.end(),
                       f.letters.begin(), f.letters.end()) != w.letters.end();
}

int Presentation::find_generator(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

int derived_d(const std::vector<Word>& relations) {
    int max_len = 0;
    for (const Word& r : relations) max_len = std::max(max_len, r.length());
    return max_len > 0 ? max_len - 1 : 0;
}

namespace {

Presentation from_names(const std::vector<std::string>& gens,
                        const std::vector<std::vector<std::string>>& rels) {
    Presentation p;
    if (gens.empty()) throw ParseError("empty generator list");
    for (const std::string& g : gens) {
        if (g.empty()) throw ParseError("empty generator name");
        if (p.find_generator(g) >= 0) throw ParseError("duplicate generator name \"" + g + "\"");
        p.generators.push_back(g);
    }
    for (const auto& rel : rels) {
        if (rel.empty()) throw ParseError("empty relation word");
        Word w;
        for (const std::string& name : rel) {
            const int idx = p.find_generator(name);
            if (idx < 0) throw ParseError("unknown generator \"" + name + "\" in relation");
            w.letters.push_back(idx);
        }
        p.relations.push_back(std::move(w));
    }
    p.d = derived_d(p.relations);
    return p;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON syntax error: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw ParseError("missing \"generators\" array");

    std::vector<std::string> gens;
    for (const auto& g : doc["generators"]) {
        if (!g.is_string()) throw ParseError("generator names must be strings");
        gens.push_back(g.get<std::string>());
    }

    std::vector<std::vector<std::string>> rels;
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) throw ParseError("\"relations\" must be an array");
        for (const auto& rel : doc["relations"]) {
            if (!rel.is_array()) throw ParseError("each relation must be an array of generator names");
            std::vector<std::string> word;
            for (const auto& letter : rel) {
                if (!letter.is_string()) throw ParseError("relation letters must be strings");
                word.push_back(letter.get<std::string>());
            }
            rels.push_back(std::move(word));
        }
    }
    return from_names(gens, rels);
}

Presentation parse_compact(const std::string& text) {
    // gens: x y; rels: yx xx;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto expect = [&](std::string_view kw) {
        skip_ws();
        if (text.compare(pos, kw.size(), kw) != 0)
            throw ParseError("expected \"" + std::string(kw) + "\"", pos);
        pos += kw.size();
    };
    auto tokens_until_semicolon = [&] {
        std::vector<std::string> toks;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) throw ParseError("missing ';'", pos);
            if (text[pos] == ';') {
                ++pos;
                return toks;
            }
            std::size_t start = pos;
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ';')
                ++pos;
            toks.push_back(text.substr(start, pos - start));
        }
    };

    expect("gens:");
    const std::vector<std::string> gens = tokens_until_semicolon();
    for (const std::string& g : gens)
        if (g.size() != 1) throw ParseError("compact form requires single-character generators, got \"" + g + "\"");

    std::vector<std::vector<std::string>> rels;
    skip_ws();
    if (pos < text.size()) {
        expect("rels:");
        for (const std::string& tok : tokens_until_semicolon()) {
            std::vector<std::string> word;
            for (char ch : tok) word.emplace_back(1, ch);
            rels.push_back(std::move(word));
        }
        skip_ws();
        if (pos < text.size()) throw ParseError("trailing input", pos);
    }
    return from_names(gens, rels);
}

Presentation parse_input(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' ? parse_presentation(text) : parse_compact(text);
    }
    throw ParseError("empty input");
}

Presentation normalize(const Presentation& p) {
    // 1. dedupe
    std::set<Word> rels(p.relations.begin(), p.relations.end());

    // 2. eliminate length-1 relations: drop the generator and everything
    //    mentioning it (removal cannot create new length-1 relations)
    std::vector<bool> dropped(p.generators.size(), false);
    for (const Word& r : rels)
        if (r.length() == 1) dropped[r.letters[0]] = true;

    std::vector<std::int32_t> remap(p.generators.size(), -1);
    Presentation out;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (dropped[i]) continue;
        remap[i] = static_cast<std::int32_t>(out.generators.size());
        out.generators.push_back(p.generators[i]);
    }

    std::vector<Word> kept;
    for (const Word& r : rels) {
        const bool mentions_dropped =
            std::any_of(r.letters.begin(), r.letters.end(), [&](std::int32_t l) { return dropped[l]; });
        if (mentions_dropped) continue;
        Word w = r;
        for (std::int32_t& l : w.letters) l = remap[l];
        kept.push_back(std::move(w));
    }

    // 3. antichain: drop any relation containing another as a factor
    std::sort(kept.begin(), kept.end());
    for (const Word& r : kept) {
        const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Word& s) {
            return s != r && is_factor(s, r);
        });
        if (!redundant) out.relations.push_back(r);
    }

    out.d = derived_d(out.relations);
    return out;
}

std::string word_string(const Presentation& p, const Word& w) {
    if (w.empty()) return "1";
    const bool compact = std::all_of(p.generators.begin(), p.generators.end(),
                                     [](const std::string& g) { return g.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (!compact && i > 0) out += '.';
        out += p.generators[w.letters[i]];
    }
    return out;
}

Word make_word(const Presentation& p, std::string_view text) {
    Word w;
    for (char ch : text) {
        const int idx = p.find_generator(std::string_view(&ch, 1));
        if (idx < 0) throw ParseError(std::string("unknown generator '") + ch + "'");
        w.letters.push_back(idx);
    }
    return w;
}

} // namespace ufna
