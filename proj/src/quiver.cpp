#include "ufna/quiver.hpp"

#include <algorithm>
#include <map>

namespace ufna {

int Quiver::vertex_index(const Word& w) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w) return -1;
    return static_cast<int>(it - vertices.begin());
}

Quiver build_quiver(const Presentation& p, std::uint64_t cap) {
    Quiver q;
    q.d = p.d;
    q.vertices = normal_words(q.d, p, cap).words;
    q.adjacency = IntMatrix(q.vertices.size(), q.vertices.size());
    q.out_arrows.resize(q.vertices.size());
    q.in_arrows.resize(q.vertices.size());

    for (const Word& w : normal_words(q.d + 1, p, cap).words) {
        Arrow a;
        a.word = w;
        a.source = q.vertex_index(subword(w, 0, q.d));
        a.target = q.vertex_index(subword(w, 1, q.d));
        a.label = w.letters.front();
        // prefix and suffix of a normal word are normal, hence vertices
        UFNA_CHECK(a.source >= 0 && a.target >= 0,
                   "arrow endpoints must be vertices");
        const int idx = static_cast<int>(q.arrows.size());
        q.adjacency.at(a.source, a.target) += 1;
        q.out_arrows[a.source].push_back(idx);
        q.in_arrows[a.target].push_back(idx);
        q.arrows.push_back(std::move(a));
    }
    return q;
}

LabelCheck check_label_property(const Quiver& q) {
    LabelCheck out;
    std::map<std::pair<int, int>, int> first_seen; // (target, label) -> arrow
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const Arrow& a = q.arrows[i];
        const auto [it, fresh] = first_seen.emplace(std::make_pair(a.target, a.label), static_cast<int>(i));
        if (!fresh) {
            out.ok = false;
            out.violations.push_back({a.target, a.label, it->second, static_cast<int>(i)});
        }
    }
    return out;
}

LabelCheck check_label_property_dual(const Quiver& q) {
    LabelCheck out;
    std::map<std::pair<int, int>, int> first_seen; // (label, target) -> arrow
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const Arrow& a = q.arrows[i];
        const auto [it, fresh] = first_seen.emplace(std::make_pair(a.label, a.target), static_cast<int>(i));
        if (!fresh) {
            out.ok = false;
            out.violations.push_back({a.target, a.label, it->second, static_cast<int>(i)});
        }
    }
    return out;
}

Int count_paths(const Quiver& q, int n) {
    const std::size_t v = q.vertices.size();
    std::vector<Int> col(v, 1); // M^n applied to the all-ones vector
    for (int step = 0; step < n; ++step) {
        std::vector<Int> next(v, 0);
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = 0; j < v; ++j) {
                const Int& m = q.adjacency.at(i, j);
                if (m != 0) next[i] += m * col[j];
            }
        col = std::move(next);
    }
    Int total = 0;
    for (const Int& x : col) total += x;
    return total;
}

namespace {

void paths_rec(const Quiver& q, Path& cur, int at, int remaining,
               std::vector<Path>& out, std::uint64_t cap) {
    if (remaining == 0) {
        if (out.size() >= cap) throw ResourceCapError("path count", cap);
        out.push_back(cur);
        return;
    }
    for (int ai : q.out_arrows[at]) {
        cur.arrows.push_back(ai);
        paths_rec(q, cur, q.arrows[ai].target, remaining - 1, out, cap);
        cur.arrows.pop_back();
    }
}

} // namespace

std::vector<Path> enumerate_paths(const Quiver& q, int n, std::uint64_t cap) {
    // depth-first from vertices in word order, extending by out-arrows in
    // word order, visits paths exactly in underlying-word order: arrows
    // out of one source differ only in their final letter.
    std::vector<Path> out;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        Path cur;
        cur.source = static_cast<int>(v);
        paths_rec(q, cur, static_cast<int>(v), n, out, cap);
    }
    return out;
}

Word path_word(const Quiver& q, const Path& path) {
    Word w = q.vertices[path.source];
    for (int ai : path.arrows) w.letters.push_back(q.arrows[ai].word.letters.back());
    return w;
}

std::vector<std::int32_t> path_labels(const Quiver& q, const Path& path) {
    std::vector<std::int32_t> labels;
    labels.reserve(path.arrows.size());
    for (int ai : path.arrows) labels.push_back(q.arrows[ai].label);
    return labels;
}

namespace {

// Tarjan, iterative to keep deep chains off the call stack.
struct SccResult {
    std::vector<int> comp;     // vertex -> component id
    int count = 0;             // components, numbered in reverse topological order
};

SccResult strongly_connected_components(const Quiver& q) {
    const int n = static_cast<int>(q.vertices.size());
    SccResult res;
    res.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < q.out_arrows[f.v].size()) {
                const int w = q.arrows[q.out_arrows[f.v][f.edge]].target;
                ++f.edge;
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    for (;;) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        res.comp[w] = res.count;
                        if (w == f.v) break;
                    }
                    ++res.count;
                }
                const int finished = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[finished]);
            }
        }
    }
    return res;
}

} // namespace

GrowthClass growth_class(const Quiver& q) {
    const int n = static_cast<int>(q.vertices.size());
    const SccResult scc = strongly_connected_components(q);

    // classify each component: acyclic, a single simple cycle, or bigger
    std::vector<int> comp_size(scc.count, 0), comp_edges(scc.count, 0);
    std::vector<bool> out_degree_ok(scc.count, true); // within-component out-degree == 1 everywhere
    std::vector<int> within_out(n, 0);
    for (int v = 0; v < n; ++v) comp_size[scc.comp[v]]++;
    for (const Arrow& a : q.arrows)
        if (scc.comp[a.source] == scc.comp[a.target]) {
            comp_edges[scc.comp[a.source]]++;
            within_out[a.source]++;
        }
    for (int v = 0; v < n; ++v)
        if (within_out[v] != 1) out_degree_ok[scc.comp[v]] = false;

    std::vector<bool> cyclic(scc.count), simple_cycle(scc.count);
    for (int c = 0; c < scc.count; ++c) {
        cyclic[c] = comp_edges[c] > 0;
        // strongly connected with every within-component out-degree 1
        // means a single directed cycle
        simple_cycle[c] = cyclic[c] && out_degree_ok[c] && comp_edges[c] == comp_size[c];
        if (cyclic[c] && !simple_cycle[c]) return {GrowthClass::Exponential, 0};
    }

    if (std::none_of(cyclic.begin(), cyclic.end(), [](bool b) { return b; }))
        return {GrowthClass::FiniteDimensional, 0};

    // longest chain of cyclic components over the condensation DAG.
    // Tarjan numbers components in reverse topological order, so a
    // component's successors always have smaller ids.
    std::vector<std::vector<int>> succ(scc.count);
    for (const Arrow& a : q.arrows) {
        const int cs = scc.comp[a.source], ct = scc.comp[a.target];
        if (cs != ct) succ[cs].push_back(ct);
    }
    std::vector<int> chain(scc.count, 0);
    for (int c = 0; c < scc.count; ++c) {
        int best_succ = 0;
        for (int s : succ[c]) best_succ = std::max(best_succ, chain[s]);
        chain[c] = best_succ + (cyclic[c] ? 1 : 0);
    }
    const int k = *std::max_element(chain.begin(), chain.end());
    return {GrowthClass::Polynomial, k};
}

std::string growth_string(const GrowthClass& g) {
    switch (g.kind) {
        case GrowthClass::FiniteDimensional: return "FiniteDimensional";
        case GrowthClass::Polynomial: return "Polynomial(" + std::to_string(g.degree) + ")";
        case GrowthClass::Exponential: return "Exponential";
    }
    return "?";
}

std::string export_dot(const Quiver& q, const Presentation& p) {
    std::string out = "digraph quiver {\n";
    for (const Word& v : q.vertices)
        out += "  \"" + word_string(p, v) + "\";\n";
    for (const Arrow& a : q.arrows) {
        out += "  \"" + word_string(p, q.vertices[a.source]) + "\" -> \"" +
               word_string(p, q.vertices[a.target]) + "\" [label=\"" +
               p.generators[a.label] + "\" tooltip=\"" + word_string(p, a.word) + "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace ufna
