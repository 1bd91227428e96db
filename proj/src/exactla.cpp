#include "ufna/exactla.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace ufna {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionError("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

std::vector<Int> IntMatrix::row_sums() const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) v[i] += at(i, j);
    return v;
}

int rank_exact(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    IntMatrix a = m;
    std::vector<std::size_t> rperm(rows), cperm(cols);
    for (std::size_t i = 0; i < rows; ++i) rperm[i] = i;
    for (std::size_t j = 0; j < cols; ++j) cperm[j] = j;

    Int prev_pivot = 1;
    std::size_t k = 0;
    const std::size_t steps = std::min(rows, cols);
    for (; k < steps; ++k) {
        // pick the absolutely smallest nonzero pivot in the trailing block
        // to slow coefficient growth
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const Int& v = a.at(rperm[i], cperm[j]);
                if (v == 0) continue;
                if (pr == rows || cmp(abs(v), abs(a.at(rperm[pr], cperm[pc]))) < 0) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break; // trailing block is zero
        std::swap(rperm[k], rperm[pr]);
        std::swap(cperm[k], cperm[pc]);

        const Int pivot = a.at(rperm[k], cperm[k]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                Int t = a.at(rperm[i], cperm[j]) * pivot -
                        a.at(rperm[i], cperm[k]) * a.at(rperm[k], cperm[j]);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                a.at(rperm[i], cperm[j]) = t;
            }
            a.at(rperm[i], cperm[k]) = 0;
        }
        prev_pivot = pivot;
    }
    return static_cast<int>(k);
}

int rank_mod_p(const IntMatrix& m, unsigned long p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<unsigned long>> a(rows, std::vector<unsigned long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Int r = m.at(i, j) % static_cast<long>(p);
            if (r < 0) r += static_cast<long>(p);
            a[i][j] = r.get_ui();
        }

    auto powmod = [&](unsigned long b, unsigned long e) {
        unsigned long long r = 1, base = b % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<unsigned long>(r);
    };

    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[row], a[piv]);
        const unsigned long inv = powmod(a[row][col], p - 2);
        for (std::size_t j = col; j < cols; ++j)
            a[row][j] = static_cast<unsigned long long>(a[row][j]) * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const unsigned long f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                unsigned long long t = static_cast<unsigned long long>(f) * a[row][j] % p;
                a[i][j] = (a[i][j] + p - t) % p;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

bool in_span(const std::vector<Int>& v, const IntMatrix& m) {
    if (v.size() != m.rows())
        throw DimensionError("in_span: vector length does not match row count");
    IntMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = v[i];
    }
    return rank_exact(aug) == rank_exact(m);
}

int rank_sparse(const std::vector<SparseVec>& rows, std::size_t cols) {
    // incremental reduction: pivots_ by leading column, each scaled to
    // leading coefficient 1
    std::map<std::size_t, std::map<std::size_t, Rat>> pivots;
    int rank = 0;
    for (const SparseVec& r : rows) {
        std::map<std::size_t, Rat> cur;
        for (const auto& [c, val] : r) {
            if (c >= cols) throw DimensionError("rank_sparse: column out of range");
            if (val != 0) cur[c] = Rat(val);
        }
        while (!cur.empty()) {
            const std::size_t lead = cur.begin()->first;
            auto hit = pivots.find(lead);
            if (hit == pivots.end()) {
                const Rat scale = cur.begin()->second;
                for (auto& [c, val] : cur) {
                    val /= scale;
                    val.canonicalize();
                }
                pivots.emplace(lead, std::move(cur));
                ++rank;
                break;
            }
            const Rat f = cur.begin()->second;
            for (const auto& [c, val] : hit->second) {
                Rat& slot = cur[c];
                slot -= f * val;
                slot.canonicalize();
                if (slot == 0) cur.erase(c);
            }
        }
    }
    return rank;
}

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0) p.coeff.push_back(std::move(v));
    return p;
}

void IntPoly::trim() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()));
    for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = a.at(i) + b.at(i);
    out.trim();
    return out;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()));
    for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = a.at(i) - b.at(i);
    out.trim();
    return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly out;
    out.coeff.assign(a.coeff.size() + b.coeff.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeff.size(); ++i) {
        if (a.coeff[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeff.size(); ++j)
            out.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
    out.trim();
    return out;
}

IntPoly poly_shift(const IntPoly& a, int k) {
    if (a.is_zero()) return {};
    IntPoly out;
    out.coeff.assign(a.coeff.size() + static_cast<std::size_t>(k), Int(0));
    for (std::size_t i = 0; i < a.coeff.size(); ++i) out.coeff[i + k] = a.coeff[i];
    return out;
}

Int poly_content(const IntPoly& a) {
    Int g = 0;
    for (const Int& c : a.coeff) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly poly_primitive(const IntPoly& a) {
    if (a.is_zero()) return {};
    Int g = poly_content(a);
    if (a.coeff.back() < 0) g = -g;
    IntPoly out = a;
    for (Int& c : out.coeff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DimensionError("poly_divexact: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree())
        throw DimensionError("poly_divexact: not divisible (degree)");

    IntPoly rem = a;
    IntPoly quot;
    quot.coeff.assign(a.coeff.size() - b.coeff.size() + 1, Int(0));
    const Int& lead = b.coeff.back();
    for (int k = rem.degree() - b.degree(); rem.degree() >= b.degree(); k = rem.degree() - b.degree()) {
        Int q;
        if (!mpz_divisible_p(rem.coeff.back().get_mpz_t(), lead.get_mpz_t()))
            throw DimensionError("poly_divexact: not divisible");
        mpz_divexact(q.get_mpz_t(), rem.coeff.back().get_mpz_t(), lead.get_mpz_t());
        quot.coeff[k] = q;
        for (std::size_t i = 0; i < b.coeff.size(); ++i)
            rem.coeff[k + i] -= q * b.coeff[i];
        rem.trim();
        if (rem.is_zero()) break;
    }
    if (!rem.is_zero()) throw DimensionError("poly_divexact: nonzero remainder");
    quot.trim();
    return quot;
}

namespace {

// pseudo-remainder of a by b (lc(b)^(deg a - deg b + 1) * a mod b)
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const Int& lead = b.coeff.back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int shift = a.degree() - b.degree();
        const Int top = a.coeff.back();
        for (Int& c : a.coeff) c *= lead;
        for (std::size_t i = 0; i < b.coeff.size(); ++i)
            a.coeff[shift + i] -= top * b.coeff[i];
        a.trim();
    }
    return a;
}

} // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return poly_primitive(b);
    if (b.is_zero()) return poly_primitive(a);
    a = poly_primitive(a);
    b = poly_primitive(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = poly_primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Resolvent polymat_resolvent(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("polymat_resolvent: matrix not square");
    const std::size_t n = m.rows();

    // Faddeev-LeVerrier: B_0 = I, a_0 = 1,
    //   C_k = M B_{k-1}, a_k = -tr(C_k)/k, B_k = C_k + a_k I.
    // Then det(I - tM) = sum a_k t^k and adj(I - tM) = sum t^k B_k.
    Resolvent out;
    out.det.coeff.assign(n + 1, Int(0));
    out.det.coeff[0] = 1;
    if (n == 0) {
        out.det.trim();
        return out; // det = 1, adj sum = 0
    }
    out.adj_sum.coeff.assign(n, Int(0));

    IntMatrix b = IntMatrix::identity(n);
    Int ak = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += b.at(i, j);
        out.adj_sum.coeff[k] = s;

        IntMatrix c = m * b;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += c.at(i, i);
        ak = -tr;
        mpz_divexact_ui(ak.get_mpz_t(), ak.get_mpz_t(), static_cast<unsigned long>(k + 1));
        out.det.coeff[k + 1] = ak;

        for (std::size_t i = 0; i < n; ++i) c.at(i, i) += ak;
        b = std::move(c);
    }
    // B_n must vanish; cheap internal consistency check
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (b.at(i, j) != 0)
                throw DimensionError("polymat_resolvent: Faddeev-LeVerrier closure failed");

    out.det.trim();
    out.adj_sum.trim();
    return out;
}

} // namespace ufna
