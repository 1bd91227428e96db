#ifndef UFNA_MORPHISM_HPP
#define UFNA_MORPHISM_HPP

// The graded algebra map from A into the path algebra kQ, degree by
// degree, as exact integer matrices: each letter goes to the sum of all
// arrows carrying its label (zero when there are none). Everything a
// degree slice supports is here: kernel/cokernel data, the degree-wise
// span identity A_n B_0 = B_n, torsion certificates for kernel and
// cokernel, and the cyclic-module probe comparing finiteness over kQ
// with finiteness over A.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ufna/exactla.hpp"
#include "ufna/language.hpp"
#include "ufna/presentation.hpp"
#include "ufna/quiver.hpp"

namespace ufna {

// Canonical basis of (kQ)_n: paths of length n ordered by underlying word.
struct PathBasis {
    int degree = 0;
    std::vector<Path> paths;
    std::vector<Word> words; // underlying word per path, strictly increasing

    int size() const { return static_cast<int>(paths.size()); }
    int row_of_word(const Word& w) const; // -1 if absent
};

PathBasis path_basis(const Quiver& q, int n, std::uint64_t cap = kDefaultCap);

// Structural form of the degree-n slice. Row r spells the normal word
// cols[col_of_row[r]] (the first n letters of its underlying word); the
// matrix entry (r, c) is 1 iff col_of_row[r] == c. Columns therefore
// have pairwise disjoint supports, the matrix is recovered exactly, and
// kernel words are the columns no row spells.
struct SliceView {
    int degree = 0;
    PathBasis rows;
    std::vector<Word> cols;       // normal words of length n, sorted
    std::vector<int> col_of_row;
    std::vector<int> group_count; // rows spelling each column

    int structural_rank() const;  // columns with group_count > 0
};

SliceView slice_view(const Quiver& q, const Presentation& p, int n,
                     std::uint64_t cap = kDefaultCap);

// Shared lazily-built bases for one (presentation, quiver) pair. The
// pipeline reuses one cache across degrees; the free functions below
// build a private one when none is passed.
class MorphismCache {
public:
    MorphismCache(Quiver q, Presentation p, std::uint64_t cap = kDefaultCap)
        : q_(std::move(q)), p_(std::move(p)), cap_(cap) {}

    const Quiver& quiver() const { return q_; }
    const Presentation& presentation() const { return p_; }
    std::uint64_t cap() const { return cap_; }

    const DegreeBasis& words(int n);
    const SliceView& slice(int n);

private:
    Quiver q_;
    Presentation p_;
    std::uint64_t cap_;
    std::map<int, DegreeBasis> words_;
    std::map<int, SliceView> slices_;
};

// The degree-n slice as a dense 0/1 integer matrix, rows = paths of
// length n, columns = normal words of length n; entry 1 iff the path's
// label sequence equals the word. Degree 0 is the all-ones column.
struct GradedMapSlice {
    int degree = 0;
    IntMatrix matrix;
};

GradedMapSlice fbar_slice(int n, const Quiver& q, const Presentation& p,
                          std::uint64_t cap = kDefaultCap);

// Same matrix by the other characterization: the column of w is the
// indicator of the paths whose underlying word is w extended by a vertex
// word, i.e. of {w.v normal : v vertex}. Kept separate so agreement of
// the two constructions can be machine-checked.
GradedMapSlice fbar_slice_by_extension(int n, const Quiver& q, const Presentation& p,
                                       std::uint64_t cap = kDefaultCap);

// Image of a (not necessarily normal) word under the algebra map,
// computed multiplicatively by path composition, as a vector over the
// path basis in degree |w|. Non-normal words come out zero.
std::vector<Int> fbar_word(const Word& w, const Quiver& q, std::uint64_t cap = kDefaultCap);

// Path-composition product of two coefficient vectors; the degree-(m+n)
// vector of the concatenations of composable path pairs.
std::vector<Int> compose_vectors(const Quiver& q,
                                 const PathBasis& bu, const std::vector<Int>& u,
                                 const PathBasis& bv, const std::vector<Int>& v,
                                 const PathBasis& buv);

// Exact kernel/cokernel data of the degree-n slice. The kernel is
// spanned by the normal words whose column is zero (columns have
// disjoint supports, so distinct nonzero columns are independent); this
// structural count is asserted against the eliminated rank.
struct KerCoker {
    int degree = 0;
    int rank = 0;
    int ker_dim = 0;
    int coker_dim = 0;
    std::vector<Word> ker_basis;  // normal words with zero column
    std::vector<int> coker_paths; // representative rows spanning the cokernel
};

KerCoker ker_coker_dims(int n, const Quiver& q, const Presentation& p,
                        std::uint64_t cap = kDefaultCap);
KerCoker ker_coker_dims(MorphismCache& cache, int n);

// span{ fbar(w) e_v : w normal of length n, v vertex } = (kQ)_n,
// verified by exact rank over the candidate columns.
bool check_degree_span(int n, const Quiver& q, const Presentation& p,
                       std::uint64_t cap = kDefaultCap);
bool check_degree_span(MorphismCache& cache, int n);

// Membership of a sparse vector in the image span of a slice: the
// columns are 0/1 with disjoint supports, so membership means the vector
// is constant on every spelled-word group it meets and meets only whole
// groups. Cross-checked against exactla::in_span in the tests.
bool in_image(const SliceView& s, const std::vector<std::pair<int, Int>>& v);

// Torsion certificate: the smallest m such that the annihilation
// condition holds for every m' in [m, m_max], each m' checked
// explicitly. For the kernel the condition is that every kernel-basis
// word of degree n has no right extension of length m' (so it kills
// A_{>= m'}); for the cokernel it is B_n fbar(A_{m'}) <= fbar(A_{n+m'})
// inside B_{n+m'}, which makes A_{>= m'} kill every degree-n cokernel
// class.
struct FdimCertificate {
    enum class Kind { Kernel, Cokernel };
    enum class Status { Certified, NotFoundWithinCap };

    Kind kind = Kind::Kernel;
    int degree = 0;
    int m = -1; // meaningful when Certified
    int m_max = 0;
    Status status = Status::NotFoundWithinCap;
    std::vector<bool> holds_at; // indexed by m' = 0..m_max, the audit table
};

FdimCertificate kernel_fdim_certificate(int n, int m_max, const Quiver& q,
                                        const Presentation& p,
                                        std::uint64_t cap = kDefaultCap);
FdimCertificate kernel_fdim_certificate(MorphismCache& cache, int n, int m_max);

FdimCertificate cokernel_fdim_certificate(int n, int m_max, const Quiver& q,
                                          const Presentation& p,
                                          std::uint64_t cap = kDefaultCap);
FdimCertificate cokernel_fdim_certificate(MorphismCache& cache, int n, int m_max);

// Cyclic-module probe for the torsion comparison: the module generated
// by a path is finite-dimensional over kQ iff no directed cycle is
// reachable from its target, and finite over A iff p fbar(A_m) = 0 for
// some m <= n_max (products of a path with letter images have no
// cancellation, so the product vanishes iff no composable extension of
// that length exists). The two must agree.
struct CyclicProbe {
    Path generator;
    int n_max = 0;
    bool finite_over_kq = false;
    bool finite_over_a = false;
    int annihilated_from = -1; // smallest m with p fbar(A_m) = 0, -1 if none found

    bool agree() const { return finite_over_kq == finite_over_a; }
};

CyclicProbe classify_cyclic(const Path& p, int n_max, const Quiver& q);

} // namespace ufna

#endif
