#include "freearr/linalg.hpp"

#include <algorithm>
#include <functional>

namespace freearr {

namespace {

void make_primitive_ll(IntVec& v) {
    Int g = 0;
    for (Int x : v) g = gcd_ll(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    for (Int x : v) {
        if (x != 0) {
            if (x < 0)
                for (Int& y : v) y = -y;
            break;
        }
    }
}

std::vector<BigInt> big_vec(const IntVec& v) {
    std::vector<BigInt> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = to_big(v[i]);
    return r;
}

bool fits_ll(const BigInt& x) { return x.fits_slong_p(); }

}  // namespace

IntVec primitive(IntVec v, bool reject_zero) {
    bool all_zero = std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
    if (all_zero) {
        if (reject_zero) throw invalid_hyperplane("zero vector");
        return v;
    }
    make_primitive_ll(v);
    return v;
}

Int dot(const IntVec& a, const IntVec& b) {
    __int128 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
    if (s > INT64_MAX || s < INT64_MIN) throw OverflowSignal{};
    return static_cast<Int>(s);
}

RowSpace::RowSpace(int ncols) : cols_(ncols) {}

int RowSpace::rank() const { return static_cast<int>(rows_.size()); }
int RowSpace::ncols() const { return cols_; }
const std::vector<IntVec>& RowSpace::rows() const { return rows_; }

bool RowSpace::insert(const IntVec& v) {
    try {
        return insert_ll(v);
    } catch (OverflowSignal&) {
        return insert_big(v);
    }
}

bool RowSpace::contains(const IntVec& v) const {
    try {
        return contains_ll(v);
    } catch (OverflowSignal&) {
        return contains_big(v);
    }
}

// Fraction-free reduction of v against the echelon rows; returns the reduced
// primitive vector (empty if it vanishes).
bool RowSpace::insert_ll(const IntVec& v) {
    IntVec w = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
        int p = pivots_[r];
        if (w[p] == 0) continue;
        Int a = rows_[r][p], b = w[p];
        Int g = gcd_ll(a, b);
        Int ma = a / g, mb = b / g;
        for (int j = 0; j < cols_; ++j)
            w[j] = checked_sub(checked_mul(w[j], ma), checked_mul(rows_[r][j], mb));
        make_primitive_ll(w);
    }
    int piv = -1;
    for (int j = 0; j < cols_; ++j)
        if (w[j] != 0) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    // Reduce earlier rows against the new one to keep full RREF shape.
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][piv] == 0) continue;
        Int a = w[piv], b = rows_[r][piv];
        Int g = gcd_ll(a, b);
        Int ma = a / g, mb = b / g;
        for (int j = 0; j < cols_; ++j)
            rows_[r][j] = checked_sub(checked_mul(rows_[r][j], ma), checked_mul(w[j], mb));
        make_primitive_ll(rows_[r]);
        if (rows_[r][pivots_[r]] < 0)
            for (Int& y : rows_[r]) y = -y;
    }
    if (w[piv] < 0)
        for (Int& y : w) y = -y;
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, w);
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

bool RowSpace::insert_big(const IntVec& v) {
    auto reduce_prim = [&](std::vector<BigInt>& w) {
        BigInt g = 0;
        for (auto& x : w) g = gcd(g, x);
        if (g > 1)
            for (auto& x : w) x /= g;
        for (auto& x : w)
            if (x != 0) {
                if (x < 0)
                    for (auto& y : w) y = -y;
                break;
            }
    };
    std::vector<BigInt> w = big_vec(v);
    std::vector<std::vector<BigInt>> brows;
    brows.reserve(rows_.size());
    for (auto& r : rows_) brows.push_back(big_vec(r));
    for (size_t r = 0; r < brows.size(); ++r) {
        int p = pivots_[r];
        if (w[p] == 0) continue;
        BigInt a = brows[r][p], b = w[p];
        BigInt g = gcd(a, b);
        BigInt ma = a / g, mb = b / g;
        for (int j = 0; j < cols_; ++j) w[j] = w[j] * ma - brows[r][j] * mb;
        reduce_prim(w);
    }
    int piv = -1;
    for (int j = 0; j < cols_; ++j)
        if (w[j] != 0) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    for (size_t r = 0; r < brows.size(); ++r) {
        if (brows[r][piv] == 0) continue;
        BigInt a = w[piv], b = brows[r][piv];
        BigInt g = gcd(a, b);
        BigInt ma = a / g, mb = b / g;
        for (int j = 0; j < cols_; ++j) brows[r][j] = brows[r][j] * ma - w[j] * mb;
        reduce_prim(brows[r]);
        if (brows[r][pivots_[r]] < 0)
            for (auto& y : brows[r]) y = -y;
    }
    if (w[piv] < 0)
        for (auto& y : w) y = -y;
    // Values must fit back into long long; primitive rows of small subspaces do
    // in all workloads here.  A row that does not fit is a hard error.
    auto back = [&](const std::vector<BigInt>& bw) {
        IntVec r(cols_);
        for (int j = 0; j < cols_; ++j) {
            if (!fits_ll(bw[j])) throw internal_error("row space entry exceeds 64 bits");
            r[j] = bw[j].get_si();
        }
        return r;
    };
    for (size_t r = 0; r < brows.size(); ++r) rows_[r] = back(brows[r]);
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, back(w));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

bool RowSpace::contains_ll(const IntVec& v) const {
    IntVec w = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
        int p = pivots_[r];
        if (w[p] == 0) continue;
        Int a = rows_[r][p], b = w[p];
        Int g = gcd_ll(a, b);
        Int ma = a / g, mb = b / g;
        bool nonzero = false;
        for (int j = 0; j < cols_; ++j) {
            w[j] = checked_sub(checked_mul(w[j], ma), checked_mul(rows_[r][j], mb));
            if (w[j] != 0) nonzero = true;
        }
        if (!nonzero) return true;
        make_primitive_ll(w);
    }
    return std::all_of(w.begin(), w.end(), [](Int x) { return x == 0; });
}

bool RowSpace::contains_big(const IntVec& v) const {
    std::vector<BigInt> w = big_vec(v);
    for (size_t r = 0; r < rows_.size(); ++r) {
        int p = pivots_[r];
        if (w[p] == 0) continue;
        BigInt a = to_big(rows_[r][p]), b = w[p];
        BigInt g = gcd(a, b);
        BigInt ma = a / g, mb = b / g;
        for (int j = 0; j < cols_; ++j) w[j] = w[j] * ma - to_big(rows_[r][j]) * mb;
    }
    return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; });
}

size_t RowSpace::hash() const {
    size_t h = 1469598103934665603ull;
    auto mix = [&](size_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<size_t>(cols_));
    for (auto& r : rows_)
        for (Int x : r) mix(static_cast<size_t>(x) * 0x100000001b3ull);
    return h;
}

bool RowSpace::operator==(const RowSpace& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
}

int rank_of(const std::vector<IntVec>& vectors, int ncols) {
    RowSpace rs(ncols);
    for (auto& v : vectors) rs.insert(v);
    return rs.rank();
}

std::vector<IntVec> rref_primitive(const std::vector<IntVec>& rows, int ncols) {
    RowSpace rs(ncols);
    for (auto& v : rows) rs.insert(v);
    return rs.rows();
}

std::vector<IntVec> nullspace(const std::vector<IntVec>& rows, int ncols) {
    RowSpace rs(ncols);
    for (auto& v : rows) rs.insert(v);
    const auto& e = rs.rows();
    std::vector<int> pivcol;
    std::vector<bool> is_piv(ncols, false);
    for (auto& r : e) {
        int p = 0;
        while (r[p] == 0) ++p;
        pivcol.push_back(p);
        is_piv[p] = true;
    }
    std::vector<IntVec> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        // x_f = 1; pivot variables solved from the echelon rows.
        std::vector<Rat> x(ncols, Rat(0));
        x[f] = 1;
        for (int r = static_cast<int>(e.size()) - 1; r >= 0; --r) {
            Rat s(0);
            for (int j = pivcol[r] + 1; j < ncols; ++j)
                if (e[r][j] != 0) s += to_rat(e[r][j]) * x[j];
            x[pivcol[r]] = -s / to_rat(e[r][pivcol[r]]);
        }
        basis.push_back(clear_denominators(x));
    }
    return basis;
}

IntVec clear_denominators(const std::vector<Rat>& v) {
    BigInt lcm_den = 1;
    for (auto& q : v) lcm_den = lcm(lcm_den, q.get_den());
    std::vector<BigInt> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    BigInt g = 0;
    for (auto& x : w) g = gcd(g, x);
    if (g > 1)
        for (auto& x : w) x /= g;
    for (auto& x : w)
        if (x != 0) {
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!w[i].fits_slong_p()) throw internal_error("cleared vector exceeds 64 bits");
        r[i] = w[i].get_si();
    }
    return r;
}

int rref_rat(RatMat& m) {
    if (m.empty()) return 0;
    int nr = static_cast<int>(m.size()), nc = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rat inv = Rat(1) / m[rank][c];
        for (int j = c; j < nc; ++j) m[rank][j] *= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (int j = c; j < nc; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> nullspace_rat(RatMat m) {
    if (m.empty()) return {};
    int nc = static_cast<int>(m[0].size());
    int rank = rref_rat(m);
    std::vector<int> pivcol;
    std::vector<bool> is_piv(nc, false);
    for (int r = 0; r < rank; ++r) {
        int p = 0;
        while (p < nc && m[r][p] == 0) ++p;
        pivcol.push_back(p);
        is_piv[p] = true;
    }
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < nc; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rat> x(nc, Rat(0));
        x[f] = 1;
        for (int r = 0; r < rank; ++r) x[pivcol[r]] = -m[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

Rat det_rat(RatMat m) {
    int n = static_cast<int>(m.size());
    Rat d(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] * inv;
            for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return d;
}

std::optional<RatMat> inverse_rat(const RatMat& m) {
    int n = static_cast<int>(m.size());
    RatMat a = m;
    for (int r = 0; r < n; ++r) {
        a[r].resize(2 * n, Rat(0));
        a[r][n + r] = 1;
    }
    int rank = rref_rat(a);
    if (rank < n) return std::nullopt;
    for (int r = 0; r < n; ++r)
        if (a[r][r] == 0) return std::nullopt;
    RatMat inv(n, std::vector<Rat>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
    return inv;
}

}  // namespace freearr
