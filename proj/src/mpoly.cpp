#include "freearr/mpoly.hpp"

#include <sstream>

namespace freearr {

int mono_degree(Mono m, int nvars) {
    int d = 0;
    for (int i = 0; i < nvars; ++i) d += mono_exp(m, i);
    return d;
}

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_[0] = c;
    return p;
}

MPoly MPoly::variable(int nvars, int var) {
    MPoly p(nvars);
    p.terms_[mono_set(0, var, 1)] = 1;
    return p;
}

MPoly MPoly::linear_form(const std::vector<Rat>& coeffs) {
    MPoly p(static_cast<int>(coeffs.size()));
    for (size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0) p.terms_[mono_set(0, static_cast<int>(j), 1)] = coeffs[j];
    return p;
}

MPoly MPoly::linear_form_int(const IntVec& coeffs) {
    std::vector<Rat> c(coeffs.size());
    for (size_t j = 0; j < coeffs.size(); ++j) c[j] = to_rat(coeffs[j]);
    return linear_form(c);
}

int MPoly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m, nvars_));
    return d;
}

void MPoly::add_term(Mono m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nvars_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(nvars_);
    if (c == 0) return r;
    for (auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

MPoly MPoly::substitute_linear(int var, const std::vector<Rat>& coeffs) const {
    MPoly sub = linear_form(coeffs);
    // Powers of the substitute, computed on demand.
    std::vector<MPoly> powers{MPoly::constant(nvars_, 1)};
    MPoly r(nvars_);
    for (auto& [m, c] : terms_) {
        int e = mono_exp(m, var);
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * sub);
        Mono base = mono_set(m, var, 0);
        for (auto& [ms, cs] : powers[e].terms()) r.add_term(mono_mul(base, ms), c * cs);
    }
    return r;
}

Rat MPoly::evaluate(const std::vector<Rat>& point) const {
    Rat v(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i) {
            int e = mono_exp(m, i);
            for (int k = 0; k < e; ++k) t *= point[i];
        }
        v += t;
    }
    return v;
}

std::string MPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Rat mag = abs(a);
        bool has_var = (m != 0);
        if (mag != 1 || !has_var) os << mag.get_str();
        bool printed = (mag != 1 || !has_var);
        for (int i = 0; i < nvars_; ++i) {
            int e = mono_exp(m, i);
            if (e == 0) continue;
            if (printed) os << "*";
            if (i < static_cast<int>(var_names.size()))
                os << var_names[i];
            else
                os << "x" << (i + 1);
            if (e > 1) os << "^" << e;
            printed = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace freearr
