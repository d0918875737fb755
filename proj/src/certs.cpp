#include "freearr/certs.hpp"

namespace freearr {

namespace {

Json rat_json(const Rat& r) { return r.get_str(); }

Rat rat_from_json(const Json& j) {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
}

Json ints_json(const std::vector<int>& v) {
    Json j = Json::array();
    for (int x : v) j.push_back(x);
    return j;
}

Json derivation_json(const Derivation& d, int nvars) {
    Json coeffs = Json::array();
    for (const MPoly& p : d.coeffs) {
        Json terms = Json::array();
        for (const auto& [mono, c] : p.terms()) {
            Json exps = Json::array();
            for (int v = 0; v < nvars; ++v) exps.push_back(mono_exp(mono, v));
            terms.push_back(Json{exps, rat_json(c)});
        }
        coeffs.push_back(std::move(terms));
    }
    return Json{{"degree", d.degree}, {"coeffs", coeffs}};
}

Derivation derivation_from_json(const Json& j, int nvars) {
    Derivation d;
    d.degree = j.at("degree").get<int>();
    for (const auto& comp : j.at("coeffs")) {
        MPoly p(nvars);
        for (const auto& term : comp) {
            Mono m = 0;
            const Json& exps = term.at(0);
            if (static_cast<int>(exps.size()) != nvars)
                throw parse_error("exponent tuple width does not match the dimension");
            for (int v = 0; v < nvars; ++v) m = mono_set(m, v, exps[v].get<int>());
            p.add_term(m, rat_from_json(term.at(1)));
        }
        d.coeffs.push_back(std::move(p));
    }
    return d;
}

std::vector<IntVec> normals_from_json(const Json& j) {
    std::vector<IntVec> out;
    for (const auto& row : j) {
        IntVec v;
        for (const auto& c : row) v.push_back(c.get<Int>());
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Json free_certificate_json(const FreeCertificate& cert) {
    int nvars = static_cast<int>(cert.essential_exponents.size());
    Json basis = Json::array();
    for (const Derivation& d : cert.basis) basis.push_back(derivation_json(d, nvars));
    return Json{{"kind", "free"},
                {"exponents", ints_json(cert.exponents)},
                {"essential_exponents", ints_json(cert.essential_exponents)},
                {"scalar", rat_json(cert.scalar)},
                {"basis", basis}};
}

FreeCertificate free_certificate_from_json(const Json& j) {
    FreeCertificate cert;
    for (const auto& e : j.at("exponents")) cert.exponents.push_back(e.get<int>());
    for (const auto& e : j.at("essential_exponents")) cert.essential_exponents.push_back(e.get<int>());
    cert.scalar = rat_from_json(j.at("scalar"));
    int nvars = static_cast<int>(cert.essential_exponents.size());
    for (const auto& d : j.at("basis")) cert.basis.push_back(derivation_from_json(d, nvars));
    return cert;
}

Json freeness_verdict_json(const FreenessVerdict& v) {
    Json j{{"free", v.free}};
    if (v.free) {
        j["certificate"] = free_certificate_json(v.cert);
    } else {
        switch (v.witness) {
            case NotFreeWitness::NonSplittingChi:
                j["witness"] = "chi-not-splitting";
                j["residual"] = v.residual.to_string();
                break;
            case NotFreeWitness::GradedDimMismatch:
                j["witness"] = "graded-dimension-mismatch";
                j["degree"] = v.mismatch_degree;
                j["predicted"] = v.predicted_dim;
                j["actual"] = v.actual_dim;
                break;
            case NotFreeWitness::SaitoIdenticallyZero:
                j["witness"] = "saito-determinant-zero";
                break;
            default:
                j["witness"] = "none";
        }
    }
    return j;
}

Json class_verdict_json(const ClassVerdict& v) {
    Json j{{"membership", to_string(v.membership)}};
    if (!v.exponents.empty()) {
        Json e = Json::array();
        for (long x : v.exponents) e.push_back(x);
        j["exponents"] = e;
    }
    if (!v.certificate.is_null()) j["certificate"] = v.certificate;
    if (!v.trace.is_null()) j["trace"] = v.trace;
    return j;
}

CertReport verify_certificate(const Arrangement& a, const Json& cert, long long budget) {
    CertReport r;
    try {
        r.kind = cert.at("kind").get<std::string>();
        if (r.kind == "free") {
            CertCheck c = verify_freeness_certificate(a, free_certificate_from_json(cert));
            r.ok = c.ok;
            r.reason = c.reason;
        } else if (r.kind == "inductive-chain") {
            TableCheck c = verify_inductive_chain(a, normals_from_json(cert.at("normals")), budget);
            r.ok = c.ok;
            if (!c.ok && !c.steps.empty()) r.reason = c.steps.back().reason;
        } else if (r.kind == "induction-table") {
            InductionTable t = parse_induction_table(cert.at("text").get<std::string>());
            TableCheck c = verify_induction_table(a, t, budget);
            r.ok = c.ok;
            if (!c.ok && !c.steps.empty()) r.reason = c.steps.back().reason;
        } else if (r.kind == "free-chain") {
            ChainCheck c = verify_free_chain(a, normals_from_json(cert.at("normals")));
            r.ok = c.ok;
            r.reason = c.reason;
        } else if (r.kind == "divisional-flag") {
            FlagCheck c = verify_divisional_flag(a, normals_from_json(cert.at("normals")));
            r.ok = c.ok;
            r.reason = c.reason;
        } else if (r.kind == "stair-steps") {
            FlagCheck c = verify_stair_steps(a, cert.at("steps"));
            r.ok = c.ok;
            r.reason = c.reason;
        } else if (r.kind == "refutation") {
            FlagCheck c = replay_refutation(a, cert.at("trace"));
            r.ok = c.ok;
            r.reason = c.reason;
        } else {
            r.reason = "unknown certificate kind: " + r.kind;
        }
    } catch (const Json::exception& e) {
        r.ok = false;
        r.reason = std::string("malformed certificate: ") + e.what();
    }
    return r;
}

}  // namespace freearr
