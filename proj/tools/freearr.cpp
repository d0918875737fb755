#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "freearr/battery.hpp"
#include "freearr/catalog.hpp"
#include "freearr/certs.hpp"
#include "freearr/iso.hpp"
#include "freearr/lattice.hpp"

using namespace freearr;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Arrangement source: a file path, or a catalog entry name.
Arrangement load_arrangement(const std::string& spec, bool strict) {
    for (const std::string& n : catalog_names())
        if (n == spec) return catalog_get(spec);
    return parse_arrangement(slurp(spec), strict);
}

// Flat source: the named catalog flats, or a file of normals in the
// arrangement text format.
Flat load_flat(const Arrangement& a, const std::string& spec) {
    if (spec == "z") return flat_Z();
    if (spec == "x") return flat_X();
    if (spec == "y") return flat_Y();
    Arrangement normals = parse_arrangement(slurp(spec));
    if (normals.dim != a.dim) throw invalid_shapes("flat normals have the wrong dimension");
    std::vector<IntVec> rows;
    for (const auto& h : normals.hyperplanes) rows.push_back(h.normal);
    return flat_from_normals(a, rows);
}

IntVec parse_int_list(const std::string& s) {
    IntVec v;
    std::string cleaned = s;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    Int x;
    while (in >> x) v.push_back(x);
    if (!in.eof()) throw parse_error("bad integer list: " + s);
    return v;
}

void emit(const Json& j, bool json, const std::string& text) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int exit_for(Membership m) {
    return m == Membership::Member ? 0 : m == Membership::NonMember ? 2 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with rational central hyperplane arrangements"};
    app.require_subcommand(1);
    bool json = false, strict = false;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_flag("--strict", strict, "reject duplicate hyperplanes when parsing");

    std::string arr_spec, arr_spec2, flat_spec, hyp_spec, cert_path, klass, cat_name, out_path;
    long long budget = 0;
    bool matroid_only = false;
    std::vector<std::string> only;

    auto* chi = app.add_subcommand("chi", "characteristic polynomial");
    chi->add_option("arrangement", arr_spec)->required();

    auto* restrict_cmd = app.add_subcommand("restrict", "restriction to a flat");
    restrict_cmd->add_option("arrangement", arr_spec)->required();
    restrict_cmd->add_option("--flat", flat_spec, "catalog flat name or file of normals")->required();

    auto* delete_cmd = app.add_subcommand("delete", "remove one hyperplane");
    delete_cmd->add_option("arrangement", arr_spec)->required();
    delete_cmd->add_option("--hyperplane", hyp_spec, "normal vector, e.g. \"0 0 1 1 0 0 0\"")->required();

    auto* localize_cmd = app.add_subcommand("localize", "hyperplanes containing a flat");
    localize_cmd->add_option("arrangement", arr_spec)->required();
    localize_cmd->add_option("--flat", flat_spec)->required();

    auto* product_cmd = app.add_subcommand("product", "product arrangement");
    product_cmd->add_option("first", arr_spec)->required();
    product_cmd->add_option("second", arr_spec2)->required();

    auto* isfree_cmd = app.add_subcommand("is-free", "freeness with certificate or witness");
    isfree_cmd->add_option("arrangement", arr_spec)->required();
    isfree_cmd->add_option("--cert-out", out_path, "write the certificate or witness JSON here");

    auto* classify_cmd = app.add_subcommand("classify", "class membership with certificate or trace");
    classify_cmd->add_option("arrangement", arr_spec)->required();
    classify_cmd->add_option("--class", klass, "one of if, af, df, sf")->required();
    classify_cmd->add_option("--budget", budget, "search node budget (0 = default)");
    classify_cmd->add_option("--cert-out", out_path);

    auto* iso_cmd = app.add_subcommand("iso", "isomorphism search");
    iso_cmd->add_option("first", arr_spec)->required();
    iso_cmd->add_option("second", arr_spec2)->required();
    iso_cmd->add_flag("--matroid", matroid_only, "lattice isomorphism only");

    auto* catalog_cmd = app.add_subcommand("catalog", "shipped arrangements and tables");
    catalog_cmd->add_option("action", cat_name, "'list' or an entry name")->required();

    auto* vc_cmd = app.add_subcommand("verify-cert", "replay a certificate or refutation");
    vc_cmd->add_option("arrangement", arr_spec)->required();
    vc_cmd->add_option("certificate", cert_path)->required();

    auto* vp_cmd = app.add_subcommand("verify-paper", "run the acceptance battery");
    vp_cmd->add_option("--only", only, "claim ids to run");
    long long vp_budget = -1;
    vp_cmd->add_option("--budget", vp_budget, "node budget per decider (-1 = default)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*chi) {
            Arrangement a = load_arrangement(arr_spec, strict);
            const IntPoly& p = char_poly_cached(a);
            RootSplit s = integer_root_multiset(p);
            Json j{{"chi", p.to_string()}, {"splits", s.splits}};
            if (s.splits) j["roots"] = s.roots;
            emit(j, json, "chi = " + factored_string(s) + "\n");
            return 0;
        }
        if (*restrict_cmd || *localize_cmd) {
            Arrangement a = load_arrangement(arr_spec, strict);
            Flat f = load_flat(a, flat_spec);
            Arrangement out = *restrict_cmd ? restriction(a, f) : localization(a, f);
            emit(Json{{"arrangement", emit_arrangement(out)}}, json, emit_arrangement(out));
            return 0;
        }
        if (*delete_cmd) {
            Arrangement a = load_arrangement(arr_spec, strict);
            Arrangement out = deletion(a, canonicalize(parse_int_list(hyp_spec)));
            emit(Json{{"arrangement", emit_arrangement(out)}}, json, emit_arrangement(out));
            return 0;
        }
        if (*product_cmd) {
            Arrangement out =
                product(load_arrangement(arr_spec, strict), load_arrangement(arr_spec2, strict));
            emit(Json{{"arrangement", emit_arrangement(out)}}, json, emit_arrangement(out));
            return 0;
        }
        if (*isfree_cmd) {
            Arrangement a = load_arrangement(arr_spec, strict);
            FreenessVerdict v = is_free(a);
            Json j = freeness_verdict_json(v);
            if (!out_path.empty()) std::ofstream(out_path) << j.dump(2) << "\n";
            std::string text = v.free ? "free, exponents" : "not free";
            if (v.free)
                for (int e : v.cert.exponents) text += " " + std::to_string(e);
            emit(j, json, text + "\n");
            return v.free ? 0 : 2;
        }
        if (*classify_cmd) {
            Arrangement a = load_arrangement(arr_spec, strict);
            ClassVerdict v = classify(a, klass, budget);
            Json j = class_verdict_json(v);
            if (!out_path.empty()) std::ofstream(out_path) << j.dump(2) << "\n";
            emit(j, json, to_string(v.membership) + "\n");
            return exit_for(v.membership);
        }
        if (*iso_cmd) {
            Arrangement a = load_arrangement(arr_spec, strict);
            Arrangement b = load_arrangement(arr_spec2, strict);
            if (matroid_only) {
                auto m = matroid_isomorphic(a, b);
                Json j{{"isomorphic", m.has_value()}};
                if (m) j["map"] = *m;
                emit(j, json, m ? "isomorphic\n" : "not isomorphic\n");
                return m ? 0 : 2;
            }
            auto m = linear_isomorphic(a, b);
            Json j{{"isomorphic", m.has_value()}};
            if (m) {
                j["map"] = m->map;
                Json rows = Json::array();
                for (const auto& row : m->matrix) {
                    Json r = Json::array();
                    for (const Rat& x : row) r.push_back(x.get_str());
                    rows.push_back(r);
                }
                j["matrix"] = rows;
            }
            emit(j, json, m ? "isomorphic\n" : "not isomorphic\n");
            return m ? 0 : 2;
        }
        if (*catalog_cmd) {
            if (cat_name == "list") {
                Json j = Json::array();
                std::string text;
                for (const std::string& n : catalog_names()) {
                    j.push_back(n);
                    text += n + "\n";
                }
                emit(j, json, text);
            } else {
                std::string text = catalog_text(cat_name);
                emit(Json{{"text", text}}, json, text);
            }
            return 0;
        }
        if (*vc_cmd) {
            Arrangement a = load_arrangement(arr_spec, strict);
            Json cert = Json::parse(slurp(cert_path));
            CertReport r = verify_certificate(a, cert);
            Json j{{"ok", r.ok}, {"kind", r.kind}, {"reason", r.reason}};
            emit(j, json, (r.ok ? "ok: " + r.kind : "failed: " + r.reason) + "\n");
            return r.ok ? 0 : 2;
        }
        if (*vp_cmd) {
            BatteryConfig cfg;
            cfg.only = only;
            cfg.budget = vp_budget;
            auto reports = verify_paper(cfg);
            if (json) {
                Json j = Json::array();
                for (const auto& r : reports)
                    j.push_back(Json{{"id", r.id},
                                     {"anchor", r.anchor},
                                     {"verdict", r.verdict},
                                     {"seconds", r.seconds},
                                     {"detail", r.detail},
                                     {"artifact", r.artifact}});
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : reports)
                    std::printf("%-10s %-18s %8.2fs  %s%s%s\n", r.verdict.c_str(), r.id.c_str(),
                                r.seconds, r.anchor.c_str(), r.detail.empty() ? "" : " -- ",
                                r.detail.c_str());
            }
            return battery_exit_code(reports);
        }
    } catch (const FreearrError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
