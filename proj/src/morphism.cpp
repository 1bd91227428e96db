#include "ufna/morphism.hpp"

#include <algorithm>
#include <queue>

namespace ufna {

int PathBasis::row_of_word(const Word& w) const {
    const auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w) return -1;
    return static_cast<int>(it - words.begin());
}

PathBasis path_basis(const Quiver& q, int n, std::uint64_t cap) {
    PathBasis b;
    b.degree = n;
    b.paths = enumerate_paths(q, n, cap);
    b.words.reserve(b.paths.size());
    for (const Path& p : b.paths) b.words.push_back(path_word(q, p));
    return b;
}

int SliceView::structural_rank() const {
    return static_cast<int>(std::count_if(group_count.begin(), group_count.end(),
                                          [](int c) { return c > 0; }));
}

SliceView slice_view(const Quiver& q, const Presentation& p, int n, std::uint64_t cap) {
    SliceView s;
    s.degree = n;
    s.rows = path_basis(q, n, cap);
    s.cols = normal_words(n, p, cap).words;
    s.col_of_row.resize(s.rows.paths.size());
    s.group_count.assign(s.cols.size(), 0);
    for (std::size_t r = 0; r < s.rows.paths.size(); ++r) {
        // spelled word = first n letters of the underlying word
        const Word spelled = subword(s.rows.words[r], 0, n);
        const auto it = std::lower_bound(s.cols.begin(), s.cols.end(), spelled);
        // a path's label word is a prefix of a normal word, hence normal
        UFNA_CHECK(it != s.cols.end() && *it == spelled,
                   "spelled word of a path must be a basis word");
        const int c = static_cast<int>(it - s.cols.begin());
        s.col_of_row[r] = c;
        s.group_count[c] += 1;
    }
    return s;
}

const DegreeBasis& MorphismCache::words(int n) {
    auto it = words_.find(n);
    if (it == words_.end()) it = words_.emplace(n, normal_words(n, p_, cap_)).first;
    return it->second;
}

const SliceView& MorphismCache::slice(int n) {
    auto it = slices_.find(n);
    if (it == slices_.end()) it = slices_.emplace(n, slice_view(q_, p_, n, cap_)).first;
    return it->second;
}

GradedMapSlice fbar_slice(int n, const Quiver& q, const Presentation& p, std::uint64_t cap) {
    const SliceView s = slice_view(q, p, n, cap);
    GradedMapSlice out;
    out.degree = n;
    out.matrix = IntMatrix(s.rows.paths.size(), s.cols.size());
    for (std::size_t r = 0; r < s.rows.paths.size(); ++r)
        out.matrix.at(r, s.col_of_row[r]) = 1;
    return out;
}

GradedMapSlice fbar_slice_by_extension(int n, const Quiver& q, const Presentation& p,
                                       std::uint64_t cap) {
    const PathBasis rows = path_basis(q, n, cap);
    const std::vector<Word> cols = normal_words(n, p, cap).words;
    GradedMapSlice out;
    out.degree = n;
    out.matrix = IntMatrix(rows.paths.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t v = 0; v < q.vertices.size(); ++v) {
            const Word extended = concat(cols[c], q.vertices[v]);
            if (!is_normal(extended, p)) continue;
            const int r = rows.row_of_word(extended);
            // w.v normal of length n+d is the underlying word of exactly
            // one path, and that path ends at v
            UFNA_CHECK(r >= 0, "extended word must underlie a path");
            out.matrix.at(r, c) = 1;
        }
    }
    return out;
}

namespace {

// partial products of letter images, kept as explicit paths (coefficient
// bookkeeping is exact; nothing ever cancels because all entries are
// nonnegative and distinct paths stay distinct under extension)
struct PartialPath {
    Path path;
    Int coeff;
};

std::vector<PartialPath> extend_by_letter(const Quiver& q, std::vector<PartialPath> cur,
                                          std::int32_t letter) {
    std::vector<PartialPath> next;
    for (PartialPath& pp : cur) {
        const int at = q.path_target(pp.path);
        for (int ai : q.out_arrows[at]) {
            if (q.arrows[ai].label != letter) continue;
            PartialPath ext;
            ext.path = pp.path;
            ext.path.arrows.push_back(ai);
            ext.coeff = pp.coeff;
            next.push_back(std::move(ext));
        }
    }
    return next;
}

} // namespace

std::vector<Int> fbar_word(const Word& w, const Quiver& q, std::uint64_t cap) {
    const PathBasis basis = path_basis(q, w.length(), cap);
    std::vector<PartialPath> cur;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        cur.push_back({Path{static_cast<int>(v), {}}, Int(1)}); // fbar(1) = sum of trivial paths
    for (std::int32_t letter : w.letters) {
        cur = extend_by_letter(q, std::move(cur), letter);
        if (cur.empty()) break;
    }
    std::vector<Int> out(basis.paths.size(), Int(0));
    for (const PartialPath& pp : cur) {
        const int r = basis.row_of_word(path_word(q, pp.path));
        UFNA_CHECK(r >= 0, "composed path missing from basis");
        out[r] += pp.coeff;
    }
    return out;
}

std::vector<Int> compose_vectors(const Quiver& q,
                                 const PathBasis& bu, const std::vector<Int>& u,
                                 const PathBasis& bv, const std::vector<Int>& v,
                                 const PathBasis& buv) {
    std::vector<Int> out(buv.paths.size(), Int(0));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        const Path& pu = bu.paths[i];
        const int tail = q.path_target(pu);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            const Path& pv = bv.paths[j];
            if (pv.source != tail) continue; // not composable: product is 0
            Path joined = pu;
            joined.arrows.insert(joined.arrows.end(), pv.arrows.begin(), pv.arrows.end());
            const int r = buv.row_of_word(path_word(q, joined));
            UFNA_CHECK(r >= 0, "concatenated path missing from basis");
            out[r] += u[i] * v[j];
        }
    }
    return out;
}

namespace {

KerCoker ker_coker_from_slice(const SliceView& s) {
    KerCoker out;
    out.degree = s.degree;

    // exact elimination over the sparse rows (each row is a unit vector)
    std::vector<SparseVec> rows;
    rows.reserve(s.rows.paths.size());
    for (std::size_t r = 0; r < s.rows.paths.size(); ++r)
        rows.push_back({{static_cast<std::size_t>(s.col_of_row[r]), Int(1)}});
    out.rank = rank_sparse(rows, s.cols.size());

    // structural cross-check: disjoint 0/1 columns make the rank the
    // number of nonzero columns
    UFNA_CHECK(out.rank == s.structural_rank(), "eliminated rank disagrees with column structure");

    out.ker_dim = static_cast<int>(s.cols.size()) - out.rank;
    out.coker_dim = static_cast<int>(s.rows.paths.size()) - out.rank;
    for (std::size_t c = 0; c < s.cols.size(); ++c)
        if (s.group_count[c] == 0) out.ker_basis.push_back(s.cols[c]);
    UFNA_CHECK(static_cast<int>(out.ker_basis.size()) == out.ker_dim,
               "kernel must be spanned by zero-column words");

    // cokernel representatives: all but the first row of each group
    std::vector<bool> seen(s.cols.size(), false);
    for (std::size_t r = 0; r < s.rows.paths.size(); ++r) {
        const int c = s.col_of_row[r];
        if (seen[c]) out.coker_paths.push_back(static_cast<int>(r));
        seen[c] = true;
    }
    UFNA_CHECK(static_cast<int>(out.coker_paths.size()) == out.coker_dim,
               "cokernel representative count mismatch");
    return out;
}

} // namespace

KerCoker ker_coker_dims(int n, const Quiver& q, const Presentation& p, std::uint64_t cap) {
    return ker_coker_from_slice(slice_view(q, p, n, cap));
}

KerCoker ker_coker_dims(MorphismCache& cache, int n) {
    return ker_coker_from_slice(cache.slice(n));
}

namespace {

bool degree_span_from(const SliceView& s, const Quiver& q) {
    // candidate generators fbar(w) e_v: the unique path with underlying
    // word w.v when that word is normal, zero otherwise
    std::vector<SparseVec> candidates;
    for (const Word& w : s.cols) {
        for (std::size_t v = 0; v < q.vertices.size(); ++v) {
            const Word extended = concat(w, q.vertices[v]);
            const int r = s.rows.row_of_word(extended);
            if (r < 0) continue; // not normal: fbar(w) e_v = 0
            candidates.push_back({{static_cast<std::size_t>(r), Int(1)}});
        }
    }
    const int rank = rank_sparse(candidates, s.rows.paths.size());
    return rank == static_cast<int>(s.rows.paths.size());
}

} // namespace

bool check_degree_span(int n, const Quiver& q, const Presentation& p, std::uint64_t cap) {
    return degree_span_from(slice_view(q, p, n, cap), q);
}

bool check_degree_span(MorphismCache& cache, int n) {
    return degree_span_from(cache.slice(n), cache.quiver());
}

bool in_image(const SliceView& s, const std::vector<std::pair<int, Int>>& v) {
    // group -> (coefficient, rows met); membership needs a constant
    // coefficient on each group and full groups only
    std::map<int, std::pair<Int, int>> touched;
    for (const auto& [row, coeff] : v) {
        if (coeff == 0) continue;
        const int c = s.col_of_row[row];
        auto [it, fresh] = touched.emplace(c, std::make_pair(coeff, 1));
        if (!fresh) {
            if (it->second.first != coeff) return false;
            it->second.second += 1;
        }
    }
    for (const auto& [c, info] : touched)
        if (info.second != s.group_count[c]) return false;
    return true;
}

namespace {

int find_certified_bound(const std::vector<bool>& holds_at) {
    // smallest m with holds_at true on all of [m, m_max]
    int m = -1;
    for (int i = static_cast<int>(holds_at.size()) - 1; i >= 0; --i) {
        if (!holds_at[i]) break;
        m = i;
    }
    return m;
}

FdimCertificate finish_certificate(FdimCertificate cert) {
    cert.m = find_certified_bound(cert.holds_at);
    cert.status = cert.m >= 0 ? FdimCertificate::Status::Certified
                              : FdimCertificate::Status::NotFoundWithinCap;
    return cert;
}

} // namespace

FdimCertificate kernel_fdim_certificate(MorphismCache& cache, int n, int m_max) {
    FdimCertificate cert;
    cert.kind = FdimCertificate::Kind::Kernel;
    cert.degree = n;
    cert.m_max = m_max;

    const SliceView& s = cache.slice(n);
    std::vector<Word> ker_words;
    for (std::size_t c = 0; c < s.cols.size(); ++c)
        if (s.group_count[c] == 0) ker_words.push_back(s.cols[c]);

    cert.holds_at.resize(m_max + 1);
    for (int mp = 0; mp <= m_max; ++mp) {
        bool all_dead = true;
        for (const Word& w : ker_words)
            if (has_right_extension(w, mp, cache.presentation())) {
                all_dead = false;
                break;
            }
        cert.holds_at[mp] = all_dead;
    }
    return finish_certificate(std::move(cert));
}

FdimCertificate kernel_fdim_certificate(int n, int m_max, const Quiver& q,
                                        const Presentation& p, std::uint64_t cap) {
    MorphismCache cache(q, p, cap);
    return kernel_fdim_certificate(cache, n, m_max);
}

namespace {

// p . fbar(w) as a sparse vector over the rows of the degree-(|p|+|w|)
// slice: all composable extensions of p spelling w, each with
// coefficient 1 (rows are pairwise distinct).
void extensions_spelling(const Quiver& q, const SliceView& target,
                         int at, const Word& w, std::size_t i, Path& cur,
                         std::vector<std::pair<int, Int>>& out) {
    if (i == w.letters.size()) {
        const int r = target.rows.row_of_word(path_word(q, cur));
        UFNA_CHECK(r >= 0, "extension path missing from basis");
        out.emplace_back(r, Int(1));
        return;
    }
    for (int ai : q.out_arrows[at]) {
        if (q.arrows[ai].label != w.letters[i]) continue;
        cur.arrows.push_back(ai);
        extensions_spelling(q, target, q.arrows[ai].target, w, i + 1, cur, out);
        cur.arrows.pop_back();
    }
}

} // namespace

FdimCertificate cokernel_fdim_certificate(MorphismCache& cache, int n, int m_max) {
    FdimCertificate cert;
    cert.kind = FdimCertificate::Kind::Cokernel;
    cert.degree = n;
    cert.m_max = m_max;
    cert.holds_at.resize(m_max + 1);

    const Quiver& q = cache.quiver();
    const SliceView& sn = cache.slice(n);
    for (int mp = 0; mp <= m_max; ++mp) {
        const SliceView& target = cache.slice(n + mp);
        const DegreeBasis& words = cache.words(mp);
        bool ok = true;
        for (const Path& base : sn.rows.paths) {
            const int at = q.path_target(base);
            for (const Word& w : words.words) {
                std::vector<std::pair<int, Int>> vec;
                Path cur = base;
                extensions_spelling(q, target, at, w, 0, cur, vec);
                if (!in_image(target, vec)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        cert.holds_at[mp] = ok;
    }
    return finish_certificate(std::move(cert));
}

FdimCertificate cokernel_fdim_certificate(int n, int m_max, const Quiver& q,
                                          const Presentation& p, std::uint64_t cap) {
    MorphismCache cache(q, p, cap);
    return cokernel_fdim_certificate(cache, n, m_max);
}

CyclicProbe classify_cyclic(const Path& p, int n_max, const Quiver& q) {
    CyclicProbe probe;
    probe.generator = p;
    probe.n_max = n_max;

    const int start = q.path_target(p);
    const int n = static_cast<int>(q.vertices.size());

    // reachable set from the path's target
    std::vector<bool> reachable(n, false);
    std::queue<int> bfs;
    bfs.push(start);
    reachable[start] = true;
    while (!bfs.empty()) {
        const int v = bfs.front();
        bfs.pop();
        for (int ai : q.out_arrows[v]) {
            const int t = q.arrows[ai].target;
            if (!reachable[t]) {
                reachable[t] = true;
                bfs.push(t);
            }
        }
    }

    // finite over kQ iff the reachable subgraph is acyclic (Kahn peel)
    std::vector<int> indeg(n, 0);
    for (const Arrow& a : q.arrows)
        if (reachable[a.source] && reachable[a.target]) indeg[a.target]++;
    std::queue<int> peel;
    int peeled = 0, total = 0;
    for (int v = 0; v < n; ++v)
        if (reachable[v]) {
            ++total;
            if (indeg[v] == 0) peel.push(v);
        }
    while (!peel.empty()) {
        const int v = peel.front();
        peel.pop();
        ++peeled;
        for (int ai : q.out_arrows[v]) {
            const int t = q.arrows[ai].target;
            if (!reachable[t]) continue;
            if (--indeg[t] == 0) peel.push(t);
        }
    }
    probe.finite_over_kq = peeled == total;

    // finite over A iff p fbar(A_m) = 0 for some m: by no-cancellation the
    // product vanishes iff no composable extension of length m exists, so
    // track the frontier of vertices reachable in exactly m steps. The
    // whole range up to n_max is walked, which also machine-checks that a
    // zero product stays zero.
    std::vector<bool> frontier(n, false);
    frontier[start] = true;
    bool was_empty = false;
    for (int m = 0; m <= n_max; ++m) {
        const bool empty = std::none_of(frontier.begin(), frontier.end(), [](bool b) { return b; });
        if (empty && probe.annihilated_from < 0) probe.annihilated_from = m;
        UFNA_CHECK(!(was_empty && !empty), "annihilation must be monotone");
        was_empty = empty;
        std::vector<bool> next(n, false);
        for (int v = 0; v < n; ++v) {
            if (!frontier[v]) continue;
            for (int ai : q.out_arrows[v]) next[q.arrows[ai].target] = true;
        }
        frontier = std::move(next);
    }
    probe.finite_over_a = probe.annihilated_from >= 0;
    return probe;
}

} // namespace ufna
