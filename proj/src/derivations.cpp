#include "freearr/derivations.hpp"

#include <algorithm>
#include <unordered_map>

#include "freearr/detail/modsolve.hpp"
#include "freearr/lattice.hpp"
#include "freearr/linalg.hpp"

namespace freearr {

MonomialBasis MonomialBasis::make(int nvars, int degree) {
    if (nvars < 0 || degree < 0) throw precondition_violated("monomial basis needs nvars, degree >= 0");
    if (nvars > 8) throw precondition_violated("derivation machinery capped at 8 variables");
    if (degree > 255) throw precondition_violated("derivation machinery capped at degree 255");
    MonomialBasis mb;
    mb.nvars = nvars;
    mb.degree = degree;
    if (nvars == 0) {
        if (degree == 0) mb.mons.push_back(0);
    } else {
        // Lexicographic by exponent tuple, first variable outermost.
        struct Rec {
            int nvars;
            std::vector<Mono>& out;
            void go(int var, int left, Mono m) {
                if (var == nvars - 1) {
                    out.push_back(mono_set(m, var, left));
                    return;
                }
                for (int e = left; e >= 0; --e) go(var + 1, left - e, mono_set(m, var, e));
            }
        } rec{nvars, mb.mons};
        rec.go(0, degree, 0);
    }
    for (int i = 0; i < static_cast<int>(mb.mons.size()); ++i) mb.index[mb.mons[i]] = i;
    return mb;
}

Derivation DegreeSpace::derivation(int k, int nvars) const {
    Derivation d;
    d.degree = degree;
    d.coeffs.assign(nvars, MPoly(nvars));
    int m = static_cast<int>(mons.mons.size());
    for (int i = 0; i < nvars; ++i)
        for (int t = 0; t < m; ++t) d.coeffs[i].add_term(mons.mons[t], basis[k][i * m + t]);
    return d;
}

DegreeSpace derivation_space(const Arrangement& a, int d) {
    if (d < 0) throw precondition_violated("derivation degree must be >= 0");
    int l = a.dim;
    DegreeSpace sp;
    sp.degree = d;
    sp.mons = MonomialBasis::make(l, d);
    int m = sp.mons.size();
    int ncols = l * m;
    if (a.size() == 0) {
        sp.basis.assign(ncols, std::vector<Rat>(ncols));
        for (int j = 0; j < ncols; ++j) sp.basis[j][j] = 1;
        return sp;
    }
    std::vector<std::vector<detail::SparseRow>> blocks;
    blocks.reserve(a.size());
    for (auto& h : a.hyperplanes) blocks.push_back(detail::hyperplane_rows(h.normal, d, sp.mons));
    sp.basis = detail::exact_kernel(blocks, ncols);
    return sp;
}

long long free_dim_prediction(const std::vector<int>& exps, int l, int d) {
    auto binom = [](long long n, long long k) {
        if (k < 0 || k > n) return 0ll;
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    long long s = 0;
    for (int b : exps)
        if (b <= d) s += binom(d - b + l - 1, l - 1);
    return s;
}

std::vector<Rat> point_off_arrangement(const Arrangement& a) {
    for (long t = 2;; ++t) {
        std::vector<Rat> q(a.dim);
        Rat pw(1);
        for (int i = 0; i < a.dim; ++i) {
            q[i] = pw;
            pw *= t;
        }
        bool ok = true;
        for (auto& h : a.hyperplanes) {
            Rat s(0);
            for (int i = 0; i < a.dim; ++i)
                if (h.normal[i] != 0) s += to_rat(h.normal[i]) * q[i];
            if (s == 0) {
                ok = false;
                break;
            }
        }
        if (ok) return q;
    }
}

Rat defining_polynomial_at(const Arrangement& a, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != a.dim) throw invalid_shapes("point dimension mismatch");
    Rat p(1);
    for (auto& h : a.hyperplanes) {
        Rat s(0);
        for (int i = 0; i < a.dim; ++i)
            if (h.normal[i] != 0) s += to_rat(h.normal[i]) * point[i];
        p *= s;
    }
    return p;
}

Derivation euler_derivation(int nvars) {
    Derivation d;
    d.degree = 1;
    for (int i = 0; i < nvars; ++i) d.coeffs.push_back(MPoly::variable(nvars, i));
    return d;
}

namespace {

// Products of lower graded pieces inside degree b: every monomial multiple of
// every basis vector of every lower piece, written in degree-b coordinates.
std::vector<std::vector<Rat>> lower_multiples(int l, int b, const MonomialBasis& mb,
                                              const std::map<int, DegreeSpace>& spaces) {
    std::vector<std::vector<Rat>> out;
    int m = mb.size();
    for (auto& [bl, sp] : spaces) {
        if (bl >= b) break;
        MonomialBasis shift = MonomialBasis::make(l, b - bl);
        int ml = sp.mons.size();
        for (auto& vec : sp.basis)
            for (Mono mu : shift.mons) {
                std::vector<Rat> w(l * m);
                for (int i = 0; i < l; ++i)
                    for (int t = 0; t < ml; ++t) {
                        if (vec[i * ml + t] == 0) continue;
                        w[i * m + mb.index.at(mono_mul(sp.mons.mons[t], mu))] = vec[i * ml + t];
                    }
                out.push_back(std::move(w));
            }
    }
    return out;
}

// Complement selection at one degree: basis vectors of the graded piece that
// are independent of the lower multiples.  Exact when `exact`, else steered
// by one solver prime.
std::vector<int> select_complement(int l, int b, const DegreeSpace& sp,
                                   const std::map<int, DegreeSpace>& spaces, int want,
                                   bool exact, int prime_index) {
    auto lower = lower_multiples(l, b, sp.mons, spaces);
    std::vector<int> chosen;
    int ncols = l * sp.mons.size();
    if (exact) {
        RowSpace span(ncols);
        for (auto& v : lower) span.insert(clear_denominators(v));
        for (int k = 0; k < sp.dimension() && static_cast<int>(chosen.size()) < want; ++k)
            if (span.insert(clear_denominators(sp.basis[k]))) chosen.push_back(k);
    } else {
        detail::ModSpan span(ncols, prime_index);
        for (auto& v : lower) span.insert(v);
        for (int k = 0; k < sp.dimension() && static_cast<int>(chosen.size()) < want; ++k)
            if (span.insert(sp.basis[k])) chosen.push_back(k);
    }
    return chosen;
}

Rat saito_det_at(const Arrangement& a, const std::vector<std::pair<int, int>>& tuple,
                 const std::map<int, DegreeSpace>& spaces, const std::vector<Rat>& q) {
    int l = a.dim;
    // Monomial values at q, per participating degree.
    std::map<int, std::vector<Rat>> monval;
    for (auto& [b, sp] : spaces) {
        std::vector<Rat> vals(sp.mons.size());
        for (int t = 0; t < sp.mons.size(); ++t) {
            Rat v(1);
            for (int i = 0; i < l; ++i) {
                int e = mono_exp(sp.mons.mons[t], i);
                for (int r = 0; r < e; ++r) v *= q[i];
            }
            vals[t] = v;
        }
        monval[b] = std::move(vals);
    }
    RatMat mat(l, std::vector<Rat>(l));
    for (int col = 0; col < l; ++col) {
        auto [b, k] = tuple[col];
        const DegreeSpace& sp = spaces.at(b);
        int m = sp.mons.size();
        const auto& vals = monval.at(b);
        for (int i = 0; i < l; ++i) {
            Rat s(0);
            for (int t = 0; t < m; ++t)
                if (sp.basis[k][i * m + t] != 0) s += sp.basis[k][i * m + t] * vals[t];
            mat[i][col] = s;
        }
    }
    return det_rat(std::move(mat));
}

}  // namespace

SaitoResult saito_scan(const Arrangement& a, const std::vector<int>& exps,
                       const std::map<int, DegreeSpace>& spaces, long long /*tuple_budget*/) {
    int l = a.dim;
    long long n = static_cast<long long>(a.size());
    if (static_cast<int>(exps.size()) != l)
        throw precondition_violated("candidate exponent count must equal the dimension");
    long long sum = 0;
    std::map<int, int> mult;
    for (int b : exps) {
        if (b < 0) throw precondition_violated("candidate exponents must be nonnegative");
        sum += b;
        ++mult[b];
    }
    if (sum != n) throw precondition_violated("candidate exponents must sum to the hyperplane count");
    for (auto& [b, m] : mult)
        if (!spaces.count(b)) throw precondition_violated("missing graded piece for a candidate exponent");

    SaitoResult res;
    std::vector<Rat> q = point_off_arrangement(a);
    Rat qq = defining_polynomial_at(a, q);

    // A tuple of derivations whose classes form bases of the graded quotients
    // by the lower multiples is a generating set; when the arrangement is
    // free with these exponents it is a basis and the determinant test fires.
    // Conversely a nonzero determinant certifies freeness outright, so the
    // fast modular selection below never produces a wrong answer: a zero
    // determinant just falls through to the exact selection, whose verdict is
    // final in both directions.
    for (int attempt = 0; attempt < 2; ++attempt) {
        bool exact = (attempt == 1);
        std::vector<std::pair<int, int>> tuple;
        bool complete = true;
        try {
            for (auto& [b, m] : mult) {
                auto chosen = select_complement(l, b, spaces.at(b), spaces, m, exact, 0);
                if (static_cast<int>(chosen.size()) < m) {
                    complete = false;
                    break;
                }
                for (int k : chosen) tuple.emplace_back(b, k);
            }
        } catch (const OverflowSignal&) {
            continue;  // denominator hit the steering prime; redo exactly
        }
        if (!complete) {
            if (!exact) continue;
            return res;
        }
        Rat det = saito_det_at(a, tuple, spaces, q);
        if (det == 0) {
            if (!exact) continue;
            return res;
        }
        res.found = true;
        res.scalar = det / qq;
        for (auto& [b, k] : tuple) res.basis.push_back(spaces.at(b).derivation(k, l));
        return res;
    }
    return res;
}

FreenessVerdict is_free(const Arrangement& a) {
    FreenessVerdict v;
    Essentialization ess = essentialize(a);
    const Arrangement& e = ess.arrangement;
    int l = e.dim;
    if (e.size() == 0) {
        v.free = true;
        v.cert.exponents.assign(a.dim, 0);
        v.cert.scalar = 1;
        return v;
    }
    const IntPoly& chi = char_poly_cached(e);
    RootSplit rs = integer_root_multiset(chi);
    if (!rs.splits) {
        v.witness = NotFreeWitness::NonSplittingChi;
        v.residual = rs.residual;
        return v;
    }
    std::vector<int> exps;
    for (long r : rs.roots) {
        if (r < 0) throw internal_error("characteristic polynomial with a negative root");
        exps.push_back(static_cast<int>(r));
    }
    std::map<int, DegreeSpace> spaces;
    for (int b : exps) {
        if (spaces.count(b)) continue;
        spaces.emplace(b, derivation_space(e, b));
        long long predicted = free_dim_prediction(exps, l, b);
        long long actual = spaces.at(b).dimension();
        if (actual != predicted) {
            v.witness = NotFreeWitness::GradedDimMismatch;
            v.mismatch_degree = b;
            v.predicted_dim = predicted;
            v.actual_dim = actual;
            return v;
        }
    }
    SaitoResult sr = saito_scan(e, exps, spaces);
    if (!sr.found) {
        v.witness = NotFreeWitness::SaitoIdenticallyZero;
        return v;
    }
    v.free = true;
    v.cert.essential_exponents = exps;
    v.cert.exponents.assign(ess.kernel_dim, 0);
    v.cert.exponents.insert(v.cert.exponents.end(), exps.begin(), exps.end());
    v.cert.basis = std::move(sr.basis);
    v.cert.scalar = sr.scalar;
    return v;
}

namespace {
std::unordered_map<std::string, FreenessVerdict> g_free_cache;
}

const FreenessVerdict& is_free_cached(const Arrangement& a) {
    std::string key = canonical_key(a);
    auto it = g_free_cache.find(key);
    if (it != g_free_cache.end()) return it->second;
    FreenessVerdict v = is_free(a);
    return g_free_cache.emplace(std::move(key), std::move(v)).first->second;
}

void clear_freeness_cache() { g_free_cache.clear(); }

CertCheck verify_freeness_certificate(const Arrangement& a, const FreeCertificate& cert) {
    auto fail = [](std::string r) { return CertCheck{false, std::move(r)}; };
    Essentialization ess = essentialize(a);
    const Arrangement& e = ess.arrangement;
    int l = e.dim;
    long long n = static_cast<long long>(e.size());

    if (static_cast<int>(cert.essential_exponents.size()) != l)
        return fail("essential exponent count does not match the essential dimension");
    std::vector<int> full(ess.kernel_dim, 0);
    full.insert(full.end(), cert.essential_exponents.begin(), cert.essential_exponents.end());
    std::sort(full.begin(), full.end());
    std::vector<int> given = cert.exponents;
    std::sort(given.begin(), given.end());
    if (full != given) return fail("full exponent list disagrees with essential exponents plus center zeros");
    long long sum = 0;
    for (int b : cert.essential_exponents) {
        if (b < 0) return fail("negative exponent");
        sum += b;
    }
    if (sum != n) return fail("exponents do not sum to the hyperplane count");
    if (static_cast<int>(cert.basis.size()) != l) return fail("basis size does not match the dimension");

    std::vector<int> degs;
    for (auto& th : cert.basis) {
        if (static_cast<int>(th.coeffs.size()) != l) return fail("derivation component count mismatch");
        for (auto& c : th.coeffs) {
            if (c.nvars() != l) return fail("derivation coefficient variable count mismatch");
            for (auto& [m, cc] : c.terms())
                if (mono_degree(m, l) != th.degree) return fail("derivation is not homogeneous of its stated degree");
        }
        degs.push_back(th.degree);
    }
    std::sort(degs.begin(), degs.end());
    std::vector<int> want = cert.essential_exponents;
    std::sort(want.begin(), want.end());
    if (degs != want) return fail("basis degrees do not realize the exponents");

    // Membership: alpha_H divides theta(alpha_H), checked by vanishing on H.
    for (auto& h : e.hyperplanes) {
        const IntVec& al = h.normal;
        int k = 0;
        for (int j = 1; j < l; ++j)
            if (llabs(al[j]) > llabs(al[k])) k = j;
        std::vector<Rat> sub(l, Rat(0));
        for (int j = 0; j < l; ++j)
            if (j != k) sub[j] = to_rat(-al[j]) / to_rat(al[k]);
        for (auto& th : cert.basis) {
            MPoly g(l);
            for (int i = 0; i < l; ++i)
                if (al[i] != 0) g = g + th.coeffs[i].scaled(to_rat(al[i]));
            if (!g.substitute_linear(k, sub).is_zero())
                return fail("derivation value not divisible by a defining form");
        }
    }

    // Degrees sum to |A| and every value is divisible, so the coefficient
    // determinant is a constant multiple of Q; one off-arrangement evaluation
    // pins the constant.
    if (cert.scalar == 0) return fail("determinant scalar is zero");
    std::vector<Rat> q = point_off_arrangement(e);
    RatMat mat(l, std::vector<Rat>(l));
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < l; ++i) mat[i][j] = cert.basis[j].coeffs[i].evaluate(q);
    Rat det = det_rat(std::move(mat));
    if (det != cert.scalar * defining_polynomial_at(e, q))
        return fail("determinant does not match the stated scalar times the defining polynomial");
    return {true, ""};
}

}  // namespace freearr
