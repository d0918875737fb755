#include "freearr/detail/modsolve.hpp"

#include <algorithm>
#include <cstdlib>

namespace freearr::detail {

namespace {

// The six largest primes below 2^31; compile-time moduli so the reductions
// in the elimination hot loop become multiply/shift sequences.
constexpr uint32_t kPrimes[] = {2147483647u, 2147483629u, 2147483587u,
                                2147483579u, 2147483563u, 2147483549u};
constexpr int kNumPrimes = static_cast<int>(sizeof(kPrimes) / sizeof(kPrimes[0]));

template <uint32_t P>
uint32_t pow_mod(uint32_t b, uint64_t e) {
    uint64_t r = 1, x = b % P;
    while (e) {
        if (e & 1) r = r * x % P;
        x = x * x % P;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

template <uint32_t P>
uint32_t inv_mod(uint32_t a) {
    return pow_mod<P>(a, P - 2);
}

template <uint32_t P>
uint32_t to_mod(long long v) {
    long long r = v % static_cast<long long>(P);
    if (r < 0) r += P;
    return static_cast<uint32_t>(r);
}

// Incremental Gaussian elimination mod a fixed prime.  Rows are stored
// normalized (pivot 1) with all entries left of the pivot zero; pivots are
// tracked in ascending column order.
template <uint32_t P>
class ModElim {
public:
    explicit ModElim(int ncols) : n_(ncols) {}

    int ncols() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces v in place against the current rows; returns the column of the
    // first surviving entry, or -1 if v lies in the span.
    int reduce(std::vector<uint32_t>& v) const {
        for (int r : order_) {
            int pc = pivcol_[r];
            uint32_t c = v[pc];
            if (!c) continue;
            uint64_t f = P - c;
            const uint32_t* piv = rows_[r].data();
            for (int j = pc; j < n_; ++j)
                v[j] = static_cast<uint32_t>((v[j] + f * piv[j]) % P);
        }
        for (int j = 0; j < n_; ++j)
            if (v[j]) return j;
        return -1;
    }

    // Returns true when v enlarged the span.
    bool add(std::vector<uint32_t> v) {
        int pc = reduce(v);
        if (pc < 0) return false;
        if (v[pc] != 1) {
            uint64_t inv = inv_mod<P>(v[pc]);
            for (int j = pc; j < n_; ++j) v[j] = static_cast<uint32_t>(v[j] * inv % P);
        }
        int r = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        pivcol_.push_back(pc);
        auto it = std::lower_bound(order_.begin(), order_.end(), pc,
                                   [&](int a, int c2) { return pivcol_[a] < c2; });
        order_.insert(it, r);
        return true;
    }

    // Kernel basis by back-substitution: one vector per free column, with the
    // identity pattern on the free columns.
    void kernel(std::vector<int>& free_cols, std::vector<std::vector<uint32_t>>& out) const {
        std::vector<char> is_piv(n_, 0);
        for (int pc : pivcol_) is_piv[pc] = 1;
        free_cols.clear();
        for (int j = 0; j < n_; ++j)
            if (!is_piv[j]) free_cols.push_back(j);
        out.clear();
        out.reserve(free_cols.size());
        for (int fc : free_cols) {
            std::vector<uint32_t> x(n_, 0);
            x[fc] = 1;
            for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
                int pc = pivcol_[*it];
                const uint32_t* row = rows_[*it].data();
                uint64_t s = 0;
                for (int j = pc + 1; j < n_; ++j)
                    if (x[j]) s += row[j] * static_cast<uint64_t>(x[j]) % P;
                x[pc] = static_cast<uint32_t>((P - s % P) % P);
            }
            out.push_back(std::move(x));
        }
    }

private:
    int n_;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<int> pivcol_;
    std::vector<int> order_;  // row indices sorted by pivot column
};

template <uint32_t P>
std::vector<uint32_t> densify(const SparseRow& row, int ncols) {
    std::vector<uint32_t> v(ncols, 0);
    for (auto& [c, coef] : row.entries) v[c] = to_mod<P>(coef);
    return v;
}

template <uint32_t P>
bool annihilates(const SparseRow& row, const std::vector<std::vector<uint32_t>>& kernel) {
    for (auto& vec : kernel) {
        uint64_t s = 0;
        for (auto& [c, coef] : row.entries) s += static_cast<uint64_t>(to_mod<P>(coef)) * vec[c] % P;
        if (s % P) return false;
    }
    return true;
}

// One full modular solve.  Once the rank stops growing for a whole block the
// engine switches to checking that further rows annihilate the current
// kernel; a row that fails the check is fed back into the elimination.  The
// shortcut is exact mod P: a row orthogonal to the kernel of the row span
// already lies in the span.
template <uint32_t P>
ModKernelResult solve_one(const std::vector<std::vector<SparseRow>>& blocks, int ncols) {
    ModElim<P> elim(ncols);
    ModKernelResult res;
    res.prime = P;
    bool checking = false;
    std::vector<std::vector<uint32_t>> kernel;
    std::vector<int> free_cols;
    size_t done = 0;
    for (auto& block : blocks) {
        if (!checking) {
            bool grew = false;
            for (auto& row : block) grew |= elim.add(densify<P>(row, ncols));
            ++done;
            if (!grew && done >= 2 && done < blocks.size()) {
                elim.kernel(free_cols, kernel);
                checking = true;
            }
        } else {
            bool dirty = false;
            for (auto& row : block)
                if (!annihilates<P>(row, kernel)) {
                    elim.add(densify<P>(row, ncols));
                    dirty = true;
                }
            if (dirty) elim.kernel(free_cols, kernel);
            ++done;
        }
    }
    if (!checking) elim.kernel(free_cols, kernel);
    res.rank = elim.rank();
    res.free_cols = std::move(free_cols);
    res.vectors = std::move(kernel);
    return res;
}

using SolveFn = ModKernelResult (*)(const std::vector<std::vector<SparseRow>>&, int);
constexpr SolveFn kSolvers[] = {solve_one<kPrimes[0]>, solve_one<kPrimes[1]>,
                                solve_one<kPrimes[2]>, solve_one<kPrimes[3]>,
                                solve_one<kPrimes[4]>, solve_one<kPrimes[5]>};

bool rational_reconstruct(const BigInt& a, const BigInt& m, Rat& out) {
    BigInt bound = sqrt(m / 2);
    BigInt r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    BigInt t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        BigInt t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return false;
    if (gcd(r1, t1) != 1) return false;
    out = Rat(r1, t1);
    out.canonicalize();
    return true;
}

// Exact check that every candidate vector annihilates every row.  Fast path
// in __int128 when magnitudes allow, mpz otherwise.
bool verify_exact(const std::vector<std::vector<SparseRow>>& blocks,
                  const std::vector<std::vector<BigInt>>& vectors) {
    const BigInt kSmall = to_big(1ll << 31);
    for (auto& vec : vectors) {
        bool small = true;
        for (auto& x : vec)
            if (abs(x) >= kSmall) {
                small = false;
                break;
            }
        if (small) {
            std::vector<long long> v(vec.size());
            for (size_t i = 0; i < vec.size(); ++i) v[i] = vec[i].get_si();
            for (auto& block : blocks)
                for (auto& row : block) {
                    __int128 s = 0;
                    for (auto& [c, coef] : row.entries) s += static_cast<__int128>(coef) * v[c];
                    if (s != 0) return false;
                }
        } else {
            for (auto& block : blocks)
                for (auto& row : block) {
                    BigInt s = 0;
                    for (auto& [c, coef] : row.entries) s += vec[c] * static_cast<long>(coef);
                    if (s != 0) return false;
                }
        }
    }
    return true;
}

}  // namespace

int num_solver_primes() { return kNumPrimes; }

ModKernelResult mod_kernel(const std::vector<std::vector<SparseRow>>& blocks, int ncols,
                           int prime_index) {
    if (prime_index < 0 || prime_index >= kNumPrimes)
        throw internal_error("modular solver prime index out of range");
    return kSolvers[prime_index](blocks, ncols);
}

namespace {

// Type-erased shim so ModSpan can hold any ModElim<P> instantiation.
struct SpanOps {
    virtual ~SpanOps() = default;
    virtual bool insert_mod(const std::vector<Rat>& v) = 0;
    virtual int rank() const = 0;
};

template <uint32_t P>
struct SpanImpl final : SpanOps {
    ModElim<P> elim;
    explicit SpanImpl(int ncols) : elim(ncols) {}
    bool insert_mod(const std::vector<Rat>& v) override {
        std::vector<uint32_t> w(v.size());
        for (size_t j = 0; j < v.size(); ++j) {
            const Rat& x = v[j];
            uint32_t den = static_cast<uint32_t>(mpz_fdiv_ui(x.get_den().get_mpz_t(), P));
            if (den == 0) throw OverflowSignal{};
            uint32_t num = static_cast<uint32_t>(mpz_fdiv_ui(x.get_num().get_mpz_t(), P));
            w[j] = static_cast<uint32_t>(static_cast<uint64_t>(num) * inv_mod<P>(den) % P);
        }
        return elim.add(std::move(w));
    }
    int rank() const override { return elim.rank(); }
};

template <uint32_t P>
std::unique_ptr<SpanOps> make_span(int ncols) {
    return std::make_unique<SpanImpl<P>>(ncols);
}

using MakeSpanFn = std::unique_ptr<SpanOps> (*)(int);
constexpr MakeSpanFn kSpanMakers[] = {make_span<kPrimes[0]>, make_span<kPrimes[1]>,
                                      make_span<kPrimes[2]>, make_span<kPrimes[3]>,
                                      make_span<kPrimes[4]>, make_span<kPrimes[5]>};

}  // namespace

struct ModSpan::Impl {
    std::unique_ptr<SpanOps> ops;
};

ModSpan::ModSpan(int ncols, int prime_index) : impl_(new Impl) {
    if (prime_index < 0 || prime_index >= kNumPrimes)
        throw internal_error("modular span prime index out of range");
    impl_->ops = kSpanMakers[prime_index](ncols);
}
ModSpan::~ModSpan() = default;
ModSpan::ModSpan(ModSpan&&) noexcept = default;
ModSpan& ModSpan::operator=(ModSpan&&) noexcept = default;
bool ModSpan::insert(const std::vector<Rat>& v) { return impl_->ops->insert_mod(v); }
int ModSpan::rank() const { return impl_->ops->rank(); }

std::vector<SparseRow> hyperplane_rows(const IntVec& alpha, int d, const MonomialBasis& mb) {
    int l = static_cast<int>(alpha.size());
    if (l != mb.nvars) throw invalid_shapes("normal length does not match monomial basis");
    int k = 0;
    for (int j = 1; j < l; ++j)
        if (llabs(alpha[j]) > llabs(alpha[k])) k = j;
    if (alpha[k] == 0) throw invalid_hyperplane("zero normal in derivation constraints");

    int nmons = mb.size();
    // Remainder coordinates: degree-d monomials not involving the pivot variable.
    std::vector<int> rowid(nmons, -1);
    int nrows = 0;
    for (int t = 0; t < nmons; ++t)
        if (mono_exp(mb.mons[t], k) == 0) rowid[t] = nrows++;

    constexpr __int128 kGuard = static_cast<__int128>(1) << 100;
    auto fit = [](__int128 v) -> long long {
        if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
            throw oracle_too_large("derivation constraint coefficient exceeds 64 bits");
        return static_cast<long long>(v);
    };

    // Powers of s = -(sum_{j != k} alpha_j x_j), the substitute for alpha_k x_k.
    std::vector<std::map<Mono, __int128>> spow(d + 1);
    spow[0][0] = 1;
    for (int e = 1; e <= d; ++e)
        for (auto& [m, c] : spow[e - 1])
            for (int j = 0; j < l; ++j) {
                if (j == k || alpha[j] == 0) continue;
                __int128 nc = c * static_cast<__int128>(-alpha[j]);
                __int128& slot = spow[e][mono_mul(m, mono_set(0, j, 1))];
                slot += nc;
                if (slot > kGuard || slot < -kGuard)
                    throw oracle_too_large("derivation substitution coefficients exceed 64 bits");
            }
    std::vector<__int128> pk(d + 1);
    pk[0] = 1;
    for (int e = 1; e <= d; ++e) {
        pk[e] = pk[e - 1] * alpha[k];
        if (pk[e] > kGuard || pk[e] < -kGuard)
            throw oracle_too_large("derivation pivot power exceeds 64 bits");
    }

    // Entry of column (i, t) in row m0*f: alpha_i * alpha_k^(d-e) * spow[e][f],
    // where t = m0 * x_k^e.  Distinct (i, t, f) hit distinct (row, column)
    // cells, so no accumulation is needed.
    std::vector<SparseRow> rows(nrows);
    for (int i = 0; i < l; ++i) {
        if (alpha[i] == 0) continue;
        for (int t = 0; t < nmons; ++t) {
            Mono m = mb.mons[t];
            int e = mono_exp(m, k);
            Mono m0 = mono_set(m, k, 0);
            int col = i * nmons + t;
            long long scale = fit(static_cast<__int128>(alpha[i]) * pk[d - e]);
            for (auto& [f, c] : spow[e]) {
                long long coef = fit(static_cast<__int128>(scale) * c);
                int r = rowid[mb.index.at(mono_mul(m0, f))];
                rows[r].entries.emplace_back(col, coef);
            }
        }
    }
    for (auto& r : rows) std::sort(r.entries.begin(), r.entries.end());
    return rows;
}

std::vector<std::vector<Rat>> exact_kernel(const std::vector<std::vector<SparseRow>>& blocks,
                                           int ncols) {
    std::vector<ModKernelResult> results;
    for (int pi = 0; pi < kNumPrimes; ++pi) {
        results.push_back(mod_kernel(blocks, ncols, pi));
        // Consensus group: the results attaining the maximum rank with
        // identical free-column profiles.  A bad prime can only lose rank, so
        // the maximum is the best available bound.
        int best = 0;
        for (auto& r : results) best = std::max(best, r.rank);
        const std::vector<int>* profile = nullptr;
        std::vector<const ModKernelResult*> group;
        for (auto& r : results) {
            if (r.rank != best) continue;
            if (!profile) profile = &r.free_cols;
            if (r.free_cols == *profile) group.push_back(&r);
        }
        size_t nker = group.front()->vectors.size();

        // CRT across the group, entry by entry, then rational reconstruction.
        BigInt modulus = 1;
        for (auto* g : group) modulus *= g->prime;
        bool ok = true;
        std::vector<std::vector<Rat>> out(nker, std::vector<Rat>(ncols));
        std::vector<std::vector<BigInt>> cleared(nker);
        for (size_t v = 0; v < nker && ok; ++v) {
            BigInt lcm_den = 1;
            for (int j = 0; j < ncols && ok; ++j) {
                BigInt x = group[0]->vectors[v][j], m = group[0]->prime;
                for (size_t g = 1; g < group.size(); ++g) {
                    BigInt p = group[g]->prime;
                    BigInt diff = (group[g]->vectors[v][j] - x) % p;
                    if (diff < 0) diff += p;
                    BigInt minv;
                    mpz_invert(minv.get_mpz_t(), BigInt(m % p).get_mpz_t(), p.get_mpz_t());
                    x += m * (diff * minv % p);
                    m *= p;
                }
                Rat r;
                if (!rational_reconstruct(x, modulus, r)) {
                    ok = false;
                    break;
                }
                out[v][j] = r;
                lcm_den = lcm(lcm_den, r.get_den());
            }
            if (!ok) break;
            cleared[v].resize(ncols);
            for (int j = 0; j < ncols; ++j)
                cleared[v][j] = out[v][j].get_num() * (lcm_den / out[v][j].get_den());
        }
        if (ok && verify_exact(blocks, cleared)) return out;
    }
    throw internal_error("modular kernel reconstruction did not converge");
}

}  // namespace freearr::detail
