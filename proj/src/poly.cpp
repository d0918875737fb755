#include "freearr/poly.hpp"

#include <algorithm>
#include <sstream>

namespace freearr {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(long c) {
    if (c == 0) return IntPoly();
    return IntPoly(std::vector<BigInt>{BigInt(c)});
}

IntPoly IntPoly::monomial(long c, int deg) {
    if (c == 0) return IntPoly();
    std::vector<BigInt> v(deg + 1, BigInt(0));
    v[deg] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::from_roots(const std::vector<long>& roots) {
    IntPoly p = IntPoly::constant(1);
    for (long r : roots) p = p * IntPoly(std::vector<BigInt>{BigInt(-r), BigInt(1)});
    return p;
}

int IntPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

const BigInt& IntPoly::coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

bool IntPoly::monic() const { return !c_.empty() && c_.back() == 1; }

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& t) const {
    BigInt v(0);
    for (int i = degree(); i >= 0; --i) v = v * t + c_[i];
    return v;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        BigInt a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        BigInt mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

bool divides(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero()) throw precondition_violated("division by zero polynomial");
    if (q.is_zero()) return true;
    if (q.degree() < p.degree()) return false;
    // Rational long division, then check integrality and zero remainder.
    std::vector<Rat> rem(q.degree() + 1);
    for (int i = 0; i <= q.degree(); ++i) rem[i] = Rat(q.coeff(i));
    Rat lead(p.coeff(p.degree()));
    for (int d = q.degree(); d >= p.degree(); --d) {
        if (rem[d] == 0) continue;
        Rat f = rem[d] / lead;
        for (int i = 0; i <= p.degree(); ++i) rem[d - p.degree() + i] -= f * Rat(p.coeff(i));
    }
    return std::all_of(rem.begin(), rem.end(), [](const Rat& x) { return x == 0; });
}

IntPoly divide_exact(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero()) throw precondition_violated("division by zero polynomial");
    if (q.is_zero()) return IntPoly();
    if (q.degree() < p.degree()) throw precondition_violated("not divisible");
    std::vector<Rat> rem(q.degree() + 1);
    for (int i = 0; i <= q.degree(); ++i) rem[i] = Rat(q.coeff(i));
    std::vector<Rat> quot(q.degree() - p.degree() + 1, Rat(0));
    Rat lead(p.coeff(p.degree()));
    for (int d = q.degree(); d >= p.degree(); --d) {
        if (rem[d] == 0) continue;
        Rat f = rem[d] / lead;
        quot[d - p.degree()] = f;
        for (int i = 0; i <= p.degree(); ++i) rem[d - p.degree() + i] -= f * Rat(p.coeff(i));
    }
    for (auto& x : rem)
        if (x != 0) throw precondition_violated("not divisible");
    std::vector<BigInt> qi(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1) throw precondition_violated("quotient not integral");
        qi[i] = quot[i].get_num();
    }
    return IntPoly(std::move(qi));
}

RootSplit integer_root_multiset(const IntPoly& p) {
    if (!p.monic()) throw precondition_violated("integer_root_multiset needs a monic polynomial");
    RootSplit s;
    IntPoly rest = p;
    // Strip roots at 0 first, then trial-divide by divisors of the constant term.
    while (rest.degree() > 0 && rest.coeff(0) == 0) {
        s.roots.push_back(0);
        std::vector<BigInt> c(rest.coeffs().begin() + 1, rest.coeffs().end());
        rest = IntPoly(std::move(c));
    }
    while (rest.degree() > 0) {
        BigInt c0 = abs(rest.coeff(0));
        bool found = false;
        for (BigInt d = 1; d * d <= c0 && !found; ++d) {
            if (c0 % d != 0) continue;
            for (const BigInt& mag : {BigInt(d), BigInt(c0 / d)}) {
                for (int sign : {1, -1}) {
                    BigInt r = sign * mag;
                    if (rest.eval(r) == 0) {
                        if (!r.fits_slong_p()) throw internal_error("root exceeds long");
                        long rl = r.get_si();
                        s.roots.push_back(rl);
                        rest = divide_exact(IntPoly::from_roots({rl}), rest);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (!found) break;
    }
    std::sort(s.roots.begin(), s.roots.end());
    if (rest.degree() <= 0) {
        s.splits = true;
        s.residual = IntPoly::constant(1);
    } else {
        s.splits = false;
        s.residual = rest;
    }
    return s;
}

std::string factored_string(const RootSplit& s) {
    std::ostringstream os;
    if (s.roots.empty() && s.splits) return "1";
    bool first = true;
    size_t i = 0;
    while (i < s.roots.size()) {
        size_t j = i;
        while (j < s.roots.size() && s.roots[j] == s.roots[i]) ++j;
        if (!first) os << "*";
        if (s.roots[i] == 0)
            os << "t";
        else if (s.roots[i] > 0)
            os << "(t-" << s.roots[i] << ")";
        else
            os << "(t+" << -s.roots[i] << ")";
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    if (!s.splits) {
        if (!first) os << "*";
        os << "(" << s.residual.to_string() << ")";
    }
    return os.str();
}

}  // namespace freearr
