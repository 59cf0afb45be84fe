#include "polymo/problem.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "polymo/cox.hpp"
#include "polymo/version.hpp"

namespace polymo {

using nlohmann::json;

std::string query_kind_name(QueryKind k) {
    switch (k) {
        case QueryKind::Validate: return "validate";
        case QueryKind::Ring: return "ring";
        case QueryKind::Product: return "product";
        case QueryKind::Score: return "score";
        case QueryKind::Intersect: return "intersect";
    }
    return "?";
}

std::string fnv1a64_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

const json& field(const json& j, const char* name, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(path, std::string("missing field '") + name + "'");
    return *it;
}

long parse_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<long>();
}

Rational parse_rational(const json& j, const std::string& path) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_number_float()) throw ParseError(path, "decimal literals are not allowed; use \"p/q\"");
        if (j.is_string()) return rat_from_string(j.get<std::string>());
        if (j.is_array() && j.size() == 2)
            return rat(parse_int(j[0], path + "[0]"), parse_int(j[1], path + "[1]"));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(path, e.what());
    }
    throw ParseError(path, "expected a rational: integer, \"p/q\" string, or [p,q] pair");
}

std::vector<long> parse_int_vector(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of integers");
    std::vector<long> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

QVector parse_rational_vector(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of rationals");
    QVector out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_rational(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Polynomial parse_polynomial(const json& j, int nvars, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of {exponents, coeff} terms");
    Polynomial p(nvars);
    for (size_t t = 0; t < j.size(); ++t) {
        std::string tp = path + "[" + std::to_string(t) + "]";
        const json& term = j[t];
        std::vector<long> exps = parse_int_vector(field(term, "exponents", tp), tp + ".exponents");
        if (int(exps.size()) != nvars)
            throw ParseError(tp + ".exponents", "expected " + std::to_string(nvars) +
                                                    " exponents (one per ray)");
        Monomial m(nvars);
        for (int i = 0; i < nvars; ++i) {
            if (exps[i] < 0) throw ParseError(tp + ".exponents", "negative exponent");
            m[i] = int(exps[i]);
        }
        p.add_term(m, parse_rational(field(term, "coeff", tp), tp + ".coeff"));
    }
    return p;
}

Fan parse_fan(const json& j, const std::string& path) {
    Fan fan;
    fan.dimension = int(parse_int(field(j, "dimension", path), path + ".dimension"));
    const json& rays = field(j, "rays", path);
    if (!rays.is_array()) throw ParseError(path + ".rays", "expected an array of rays");
    for (size_t i = 0; i < rays.size(); ++i)
        fan.rays.push_back(parse_int_vector(rays[i], path + ".rays[" + std::to_string(i) + "]"));
    const json& cones = field(j, "max_cones", path);
    if (!cones.is_array()) throw ParseError(path + ".max_cones", "expected an array of cones");
    for (size_t i = 0; i < cones.size(); ++i) {
        std::vector<long> idx =
            parse_int_vector(cones[i], path + ".max_cones[" + std::to_string(i) + "]");
        fan.max_cones.emplace_back(idx.begin(), idx.end());
    }
    return fan;
}

DeformationSpec parse_deformation(const json& j, const std::string& path) {
    DeformationSpec spec;
    if (j.is_string()) {
        if (j.get<std::string>() != "euler")
            throw ParseError(path, "expected \"euler\" or an array of coefficients");
        spec.euler = true;
        return spec;
    }
    if (!j.is_array()) throw ParseError(path, "expected \"euler\" or an array of coefficients");
    spec.euler = false;
    for (size_t i = 0; i < j.size(); ++i) {
        std::string cp = path + "[" + std::to_string(i) + "]";
        const json& c = j[i];
        DeformedEuler::Coefficient coeff;
        coeff.row_ray = int(parse_int(field(c, "row_ray", cp), cp + ".row_ray"));
        coeff.col_ray = int(parse_int(field(c, "col_ray", cp), cp + ".col_ray"));
        coeff.w = parse_rational_vector(field(c, "w", cp), cp + ".w");
        spec.coefficients.push_back(std::move(coeff));
    }
    return spec;
}

QueryKind parse_kind(const std::string& s, const std::string& path) {
    if (s == "validate") return QueryKind::Validate;
    if (s == "ring") return QueryKind::Ring;
    if (s == "product") return QueryKind::Product;
    if (s == "score") return QueryKind::Score;
    if (s == "intersect") return QueryKind::Intersect;
    throw ParseError(path, "unknown query kind '" + s + "'");
}

// ---- canonical serialization helpers ----

json rational_json(const Rational& q) { return rat_to_string(q); }

json polynomial_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json term;
        term["exponents"] = m;
        term["coeff"] = rational_json(c);
        terms.push_back(term);
    }
    return terms;
}

json wvector_json(const WVector& w) {
    json out = json::array();
    for (const auto& c : w) out.push_back(rational_json(c));
    return out;
}

json sym_json(const SymElement& s) {
    json out;
    out["terms"] = polynomial_json(s.poly());
    out["pretty"] = s.to_string();
    return out;
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError("$", std::string("malformed JSON: ") + e.what());
    }

    ProblemFile pf;
    pf.input_digest = fnv1a64_hex(text);
    pf.fan = parse_fan(field(doc, "fan", "$"), "$.fan");
    try {
        pf.variety = ToricVariety::build(pf.fan);
    } catch (const std::exception& e) {
        throw ParseError("$.fan", e.what());
    }
    const int nrays = pf.fan.ray_count();
    const bool have_classes = pf.variety.validation().smooth;

    if (doc.contains("deformation"))
        pf.deformation = parse_deformation(doc["deformation"], "$.deformation");
    if (!pf.deformation.euler && have_classes) {
        try {
            DeformedEuler::from_coefficients(pf.variety, pf.deformation.coefficients);
        } catch (const std::exception& e) {
            throw ParseError("$.deformation", e.what());
        }
    }

    std::set<std::string> labels;
    if (doc.contains("hypersurfaces")) {
        const json& hs = doc["hypersurfaces"];
        if (!hs.is_array()) throw ParseError("$.hypersurfaces", "expected an array");
        for (size_t i = 0; i < hs.size(); ++i) {
            std::string hp = "$.hypersurfaces[" + std::to_string(i) + "]";
            const json& h = hs[i];
            HypersurfaceSpec spec;
            const json& label = field(h, "label", hp);
            if (!label.is_string()) throw ParseError(hp + ".label", "expected a string");
            spec.label = label.get<std::string>();
            if (!labels.insert(spec.label).second)
                throw ParseError(hp + ".label", "duplicate hypersurface label '" + spec.label + "'");

            spec.f = parse_polynomial(field(h, "f", hp), nrays, hp + ".f");
            if (spec.f.is_zero()) throw ParseError(hp + ".f", "hypersurface section must be nonzero");

            if (h.contains("class")) {
                spec.declared_class = parse_int_vector(h["class"], hp + ".class");
            }
            if (h.contains("J")) {
                const json& J = h["J"];
                if (J.is_string()) {
                    if (J.get<std::string>() != "jacobian")
                        throw ParseError(hp + ".J", "expected \"jacobian\" or a per-ray map");
                    spec.jacobian = true;
                } else if (J.is_object()) {
                    spec.jacobian = false;
                    spec.J.assign(nrays, Polynomial::zero(nrays));
                    for (const auto& [key, val] : J.items()) {
                        std::string jp = hp + ".J." + key;
                        int ray = -1;
                        try {
                            size_t pos = 0;
                            ray = std::stoi(key, &pos);
                            if (pos != key.size()) ray = -1;
                        } catch (...) { ray = -1; }
                        if (ray < 0 || ray >= nrays)
                            throw ParseError(jp, "unknown ray label '" + key + "'");
                        spec.J[ray] = parse_polynomial(val, nrays, jp);
                    }
                } else {
                    throw ParseError(hp + ".J", "expected \"jacobian\" or a per-ray map");
                }
            }

            if (have_classes) {
                auto cls = polynomial_class(pf.variety, spec.f);
                if (!cls) throw ParseError(hp + ".f", "f is not class-homogeneous");
                if (spec.declared_class && *spec.declared_class != *cls)
                    throw ParseError(hp + ".class", "declared class differs from the class of f");
                if (!spec.jacobian) {
                    for (int rho = 0; rho < nrays; ++rho) {
                        if (spec.J[rho].is_zero()) continue;
                        auto jc = polynomial_class(pf.variety, spec.J[rho]);
                        DivisorClass expected =
                            class_add(*cls, class_scale(-1, pf.variety.ray_degree(rho)));
                        if (!jc || *jc != expected)
                            throw ParseError(hp + ".J." + std::to_string(rho),
                                             "entry is not class-homogeneous of class H - deg(D_" +
                                                 std::to_string(rho) + ")");
                    }
                }
            }
            pf.hypersurfaces.push_back(std::move(spec));
        }
    }

    const json& queries = field(doc, "queries", "$");
    if (!queries.is_array()) throw ParseError("$.queries", "expected an array");
    for (size_t i = 0; i < queries.size(); ++i) {
        std::string qp = "$.queries[" + std::to_string(i) + "]";
        const json& q = queries[i];
        const json& kind = field(q, "kind", qp);
        if (!kind.is_string()) throw ParseError(qp + ".kind", "expected a string");
        Query query;
        query.kind = parse_kind(kind.get<std::string>(), qp + ".kind");
        if (q.contains("sigmas")) {
            const json& s = q["sigmas"];
            if (!s.is_array()) throw ParseError(qp + ".sigmas", "expected an array of W vectors");
            for (size_t k = 0; k < s.size(); ++k)
                query.sigmas.push_back(
                    parse_rational_vector(s[k], qp + ".sigmas[" + std::to_string(k) + "]"));
        }
        if (q.contains("classes")) {
            const json& s = q["classes"];
            if (!s.is_array()) throw ParseError(qp + ".classes", "expected an array of classes");
            for (size_t k = 0; k < s.size(); ++k)
                query.classes.push_back(
                    parse_int_vector(s[k], qp + ".classes[" + std::to_string(k) + "]"));
        }
        if (q.contains("hypersurfaces")) {
            const json& s = q["hypersurfaces"];
            if (!s.is_array()) throw ParseError(qp + ".hypersurfaces", "expected an array of labels");
            for (size_t k = 0; k < s.size(); ++k) {
                std::string lp = qp + ".hypersurfaces[" + std::to_string(k) + "]";
                if (!s[k].is_string()) throw ParseError(lp, "expected a label string");
                std::string lab = s[k].get<std::string>();
                if (!labels.contains(lab)) throw ParseError(lp, "unknown hypersurface label '" + lab + "'");
                query.hypersurfaces.push_back(lab);
            }
        }
        pf.queries.push_back(std::move(query));
    }
    return pf;
}

ProblemFile parse_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("$", "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

json serialize_problem(const ProblemFile& pf) {
    json doc;
    doc["fan"]["dimension"] = pf.fan.dimension;
    doc["fan"]["rays"] = pf.fan.rays;
    doc["fan"]["max_cones"] = pf.fan.max_cones;

    if (pf.deformation.euler) {
        doc["deformation"] = "euler";
    } else {
        json coeffs = json::array();
        for (const auto& c : pf.deformation.coefficients) {
            json e;
            e["row_ray"] = c.row_ray;
            e["col_ray"] = c.col_ray;
            e["w"] = wvector_json(c.w);
            coeffs.push_back(e);
        }
        doc["deformation"] = coeffs;
    }

    json hs = json::array();
    for (const auto& h : pf.hypersurfaces) {
        json e;
        e["label"] = h.label;
        e["f"] = polynomial_json(h.f);
        if (h.declared_class) e["class"] = *h.declared_class;
        if (h.jacobian) {
            e["J"] = "jacobian";
        } else {
            json jmap = json::object();
            for (size_t rho = 0; rho < h.J.size(); ++rho)
                if (!h.J[rho].is_zero()) jmap[std::to_string(rho)] = polynomial_json(h.J[rho]);
            e["J"] = jmap;
        }
        hs.push_back(e);
    }
    if (!hs.empty()) doc["hypersurfaces"] = hs;

    json qs = json::array();
    for (const auto& q : pf.queries) {
        json e;
        e["kind"] = query_kind_name(q.kind);
        if (!q.sigmas.empty()) {
            json s = json::array();
            for (const auto& w : q.sigmas) s.push_back(wvector_json(w));
            e["sigmas"] = s;
        }
        if (!q.classes.empty()) e["classes"] = q.classes;
        if (!q.hypersurfaces.empty()) e["hypersurfaces"] = q.hypersurfaces;
        qs.push_back(e);
    }
    doc["queries"] = qs;
    return doc;
}

namespace {

// shared engines, built at most once per run
struct EngineCache {
    const ProblemFile& pf;
    RunOptions options;

    std::optional<DeformedEuler> euler;
    std::string euler_error;
    std::optional<PolymologyRing> ring;
    std::string ring_error;
    std::optional<ChowRing> chow;
    std::string chow_error;
    std::map<std::string, std::pair<HypersurfaceData, WVector>> gammas;

    explicit EngineCache(const ProblemFile& p, RunOptions o) : pf(p), options(o) {}

    void require_valid_fan() {
        if (!pf.variety.validation().ok())
            throw std::runtime_error("fan not validated: " + pf.variety.validation().status());
    }

    const DeformedEuler& get_euler() {
        if (!euler && euler_error.empty()) {
            try {
                require_valid_fan();
                euler = pf.deformation.euler
                            ? DeformedEuler::undeformed(pf.variety)
                            : DeformedEuler::from_coefficients(pf.variety,
                                                               pf.deformation.coefficients);
            } catch (const std::exception& e) {
                euler_error = e.what();
            }
        }
        if (!euler) throw std::runtime_error(euler_error);
        return *euler;
    }

    const PolymologyRing& get_ring() {
        if (!ring && ring_error.empty()) {
            try {
                ring.emplace(pf.variety, get_euler());
            } catch (const std::exception& e) {
                ring_error = e.what();
            }
        }
        if (!ring) throw std::runtime_error(ring_error);
        return *ring;
    }

    const ChowRing& get_chow() {
        if (!chow && chow_error.empty()) {
            try {
                require_valid_fan();
                chow.emplace(pf.variety);
            } catch (const std::exception& e) {
                chow_error = e.what();
            }
        }
        if (!chow) throw std::runtime_error(chow_error);
        return *chow;
    }

    const std::pair<HypersurfaceData, WVector>& get_gamma(const std::string& label) {
        auto it = gammas.find(label);
        if (it != gammas.end()) return it->second;
        const HypersurfaceSpec* spec = nullptr;
        for (const auto& h : pf.hypersurfaces)
            if (h.label == label) spec = &h;
        if (!spec) throw std::runtime_error("unknown hypersurface label '" + label + "'");
        HypersurfaceData data =
            spec->jacobian ? default_jacobian(pf.variety, spec->label, spec->f)
                           : make_hypersurface(pf.variety, spec->label, spec->f, spec->J);
        WVector gamma = extract_gamma(pf.variety, get_euler(), data);
        return gammas.emplace(label, std::make_pair(std::move(data), std::move(gamma))).first->second;
    }
};

json run_validate(EngineCache& cache) {
    const auto& v = cache.pf.variety.validation();
    json out;
    out["fan"]["simplicial"] = v.simplicial;
    out["fan"]["smooth"] = v.smooth;
    out["fan"]["wall_condition"] = v.wall_condition;
    out["fan"]["ray_coverage"] = v.ray_coverage;
    out["fan"]["completeness"] = v.complete_asserted ? "asserted" : "unverified";
    out["fan"]["problems"] = v.problems;
    bool ok = v.ok();
    std::string status = v.status();

    if (ok) {
        out["class_rank"] = cache.pf.variety.class_rank();
        out["ray_degrees"] = cache.pf.variety.ray_degrees();
        try {
            DeformationReport rep = validate_deformation(cache.pf.variety, cache.get_euler());
            out["deformation"]["class_compatible"] = rep.class_compatible;
            out["deformation"]["block_complete"] = rep.block_complete;
            out["deformation"]["nondegenerate"] = rep.nondegenerate;
            out["deformation"]["dims_valid"] = rep.dims_valid;
            out["deformation"]["problems"] = rep.problems;
            if (!rep.ok()) {
                ok = false;
                status = "failed: deformation";
            }
        } catch (const std::exception& e) {
            ok = false;
            status = "failed: deformation";
            out["deformation"]["error"] = e.what();
        }
    }
    out["status"] = status;
    out["passed"] = ok;
    return out;
}

json run_ring(EngineCache& cache) {
    const PolymologyRing& ring = cache.get_ring();
    json out;
    out["status"] = "ok";
    out["class_rank"] = ring.variety().class_rank();
    out["ray_degrees"] = ring.variety().ray_degrees();
    out["dims"] = ring.quotient_dims();
    json gens = json::array();
    for (size_t i = 0; i < ring.ideal().generators.size(); ++i) {
        json g = sym_json(ring.ideal().generators[i]);
        g["collection"] = ring.ideal().collections[i];
        gens.push_back(g);
    }
    out["generators"] = gens;
    return out;
}

json run_intersect(EngineCache& cache, const Query& q) {
    json out;
    out["classes"] = q.classes;
    out["value"] = rational_json(cache.get_chow().intersection_number(q.classes));
    out["status"] = "ok";
    return out;
}

json run_product(EngineCache& cache, const Query& q) {
    const PolymologyRing& ring = cache.get_ring();
    json out;
    json sig = json::array();
    for (const auto& w : q.sigmas) sig.push_back(wvector_json(w));
    out["sigmas"] = sig;
    out["value"] = rational_json(ring.product(q.sigmas));
    out["warnings"] = hypothesis_warnings(ring, 0);
    out["status"] = "ok";
    return out;
}

json run_score(EngineCache& cache, const Query& q) {
    const PolymologyRing& ring = cache.get_ring();
    CompleteIntersectionData ci;
    for (const auto& label : q.hypersurfaces) {
        const auto& [data, gamma] = cache.get_gamma(label);
        ci.hypersurfaces.push_back(data);
        ci.gammas.push_back(gamma);
    }
    const int n = ring.variety().dimension();
    const int m = ci.codimension();
    if (m > n - 3 && !cache.options.allow_hypothesis_violations)
        throw std::runtime_error(std::string(kWarnCodimension) +
                                 " (m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                                 ") and hypothesis violations are not allowed");

    EvalReport report = score_product(ring, ci, q.sigmas);
    json out;
    out["hypersurfaces"] = q.hypersurfaces;
    json gs = json::array();
    for (const auto& g : report.inserted_gammas) gs.push_back(wvector_json(g));
    out["gammas"] = gs;
    out["value"] = rational_json(report.value);
    out["certificate"] = sym_json(report.certificate);
    out["warnings"] = report.warnings;
    out["status"] = "ok";
    return out;
}

}  // namespace

Report run_queries(const ProblemFile& pf, const RunOptions& options) {
    EngineCache cache(pf, options);

    std::vector<Query> queries;
    if (options.only_kind) {
        for (const auto& q : pf.queries)
            if (q.kind == *options.only_kind) queries.push_back(q);
        if (queries.empty() &&
            (*options.only_kind == QueryKind::Validate || *options.only_kind == QueryKind::Ring))
            queries.push_back(Query{*options.only_kind, {}, {}, {}});
    } else {
        queries = pf.queries;
    }

    Report report;
    report.document["engine"] = kEngineName;
    report.document["version"] = kEngineVersion;
    report.document["input_digest"] = pf.input_digest;
    json results = json::array();

    for (const auto& q : queries) {
        json out;
        try {
            switch (q.kind) {
                case QueryKind::Validate:
                    out = run_validate(cache);
                    if (!out["passed"].get<bool>()) report.validation_failed = true;
                    break;
                case QueryKind::Ring: out = run_ring(cache); break;
                case QueryKind::Intersect: out = run_intersect(cache, q); break;
                case QueryKind::Product: out = run_product(cache, q); break;
                case QueryKind::Score: out = run_score(cache, q); break;
            }
        } catch (const std::exception& e) {
            out = json::object();
            out["status"] = "error";
            out["error"] = e.what();
            report.query_errored = true;
        }
        out["kind"] = query_kind_name(q.kind);
        results.push_back(out);
    }
    report.document["queries"] = results;
    return report;
}

std::string Report::to_json() const { return document.dump(2) + "\n"; }

std::string Report::to_text() const {
    std::ostringstream os;
    os << document["engine"].get<std::string>() << " " << document["version"].get<std::string>()
       << "  (input " << document["input_digest"].get<std::string>() << ")\n";
    int idx = 0;
    for (const auto& q : document["queries"]) {
        os << "[" << idx++ << "] " << q["kind"].get<std::string>() << ": "
           << q["status"].get<std::string>() << "\n";
        if (q.contains("error")) os << "    error: " << q["error"].get<std::string>() << "\n";
        if (q.contains("value")) os << "    value: " << q["value"].get<std::string>() << "\n";
        if (q.contains("dims")) os << "    dims: " << q["dims"].dump() << "\n";
        if (q.contains("generators")) {
            for (const auto& g : q["generators"])
                os << "    generator: " << g["pretty"].get<std::string>() << "\n";
        }
        if (q.contains("gammas")) os << "    gammas: " << q["gammas"].dump() << "\n";
        if (q.contains("warnings"))
            for (const auto& w : q["warnings"]) os << "    warning: " << w.get<std::string>() << "\n";
    }
    return os.str();
}

}  // namespace polymo
