#ifndef UFNA_QUIVER_HPP
#define UFNA_QUIVER_HPP

// The Ufnarovskii graph of a monomial algebra: vertices are the normal
// words of length d, arrows the normal words of length d+1, where an
// arrow's source is its length-d prefix, its target the length-d suffix,
// and its label the first letter. Paths of length n are in bijection
// with normal words of length n+d, which makes the graph a transfer
// system for the algebra's dimension sequence.

#include <cstdint>
#include <string>
#include <vector>

#include "ufna/exactla.hpp"
#include "ufna/language.hpp"
#include "ufna/presentation.hpp"

namespace ufna {

struct Arrow {
    Word word;  // normal word of length d+1
    int source; // vertex index of the length-d prefix
    int target; // vertex index of the length-d suffix
    int label;  // first letter
};

// Composable left-to-right: target of each arrow = source of the next.
// A length-0 path is a vertex carrying the trivial path e_v.
struct Path {
    int source = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Path&) const = default;
};

struct Quiver {
    int d = 0;
    std::vector<Word> vertices; // sorted normal words of length d
    std::vector<Arrow> arrows;  // sorted by arrow word
    IntMatrix adjacency;        // entry (u,v) = number of arrows u -> v

    std::vector<std::vector<int>> out_arrows; // per source, sorted by arrow word
    std::vector<std::vector<int>> in_arrows;  // per target, sorted by arrow word

    int vertex_index(const Word& w) const; // -1 if absent
    int path_target(const Path& p) const {
        return p.arrows.empty() ? p.source : arrows[p.arrows.back()].target;
    }
};

// Isolated vertices are retained: a vertex with no incident arrow still
// carries its trivial path. An empty quiver (no normal words of length d)
// is legal.
Quiver build_quiver(const Presentation& p, std::uint64_t cap = kDefaultCap);

// Machine check of the label separation property: arrows ending at the
// same vertex carry distinct labels. This is a theorem for built quivers;
// the check exists so a quiver can prove it rather than assume it.
struct LabelCheck {
    struct Violation {
        int vertex;
        int label;
        int arrow_a;
        int arrow_b;
    };
    bool ok = true;
    std::vector<Violation> violations;
};

LabelCheck check_label_property(const Quiver& q);
// Dual form: arrows with equal label end at distinct vertices.
LabelCheck check_label_property_dual(const Quiver& q);

// 1^T M^n 1, exactly; equals the number of paths of length n.
Int count_paths(const Quiver& q, int n);

// All paths of length n, ordered by their underlying words.
std::vector<Path> enumerate_paths(const Quiver& q, int n, std::uint64_t cap = kDefaultCap);

// Overlap reading: source word followed by the last letter of each arrow
// word. The result is the unique normal word of length n+d whose length-
// (d+1) windows are the path's arrow words; its first n letters are the
// path's labels.
Word path_word(const Quiver& q, const Path& path);
std::vector<std::int32_t> path_labels(const Quiver& q, const Path& path);

// Growth trichotomy read off the cycle structure:
//  - FiniteDimensional: no directed cycle;
//  - Exponential: two distinct cycles share a vertex (equivalently, some
//    strongly connected component is not a single simple cycle);
//  - Polynomial(k) otherwise, k = the largest number of distinct cycles
//    met along one directed path, so path counts grow like n^(k-1).
struct GrowthClass {
    enum Kind { FiniteDimensional, Polynomial, Exponential };
    Kind kind = FiniteDimensional;
    int degree = 0; // meaningful for Polynomial only

    bool operator==(const GrowthClass&) const = default;
};

GrowthClass growth_class(const Quiver& q);
std::string growth_string(const GrowthClass& g);

// Graphviz digraph; node names are vertex words, edges carry label (the
// arrow's letter) and tooltip (the arrow's word). Output is byte
// deterministic.
std::string export_dot(const Quiver& q, const Presentation& p);

} // namespace ufna

#endif
