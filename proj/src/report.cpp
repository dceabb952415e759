#include "zpdlab/report.hpp"

#include "zpdlab/deriv.hpp"
#include "zpdlab/rng.hpp"
#include "zpdlab/specdoc.hpp"
#include "zpdlab/zpd.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace zpdlab {

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "zpdlab 1.0.0";

json vec_json(const Vec& v) {
    json out = json::array();
    for (const Scalar& c : v) out.push_back(c.str());
    return out;
}

json pairs_json(const std::vector<std::pair<Vec, Vec>>& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back(json::array({vec_json(a), vec_json(b)}));
    return out;
}

json subspace_json(const Subspace& s) {
    json out;
    out["ambient"] = s.ambient();
    out["dim"] = s.dim();
    json basis = json::array();
    for (const Vec& r : s.basis()) basis.push_back(vec_json(r));
    out["basis"] = basis;
    return out;
}

json certificate_json(const Certificate& cert) {
    json out;
    out["outcome"] = outcome_str(cert.outcome);
    out["detail"] = cert.detail;
    if (!cert.dims.empty()) {
        json dims;
        for (const auto& [k, v] : cert.dims) dims[k] = v;
        out["dims"] = dims;
    }
    if (!cert.witness.empty()) {
        json w = json::array();
        for (const Vec& v : cert.witness) w.push_back(vec_json(v));
        out["witness"] = w;
    }
    if (!cert.witness_pair.empty()) out["witness_pairs"] = pairs_json(cert.witness_pair);
    if (!cert.generators.empty()) out["generators"] = pairs_json(cert.generators);
    out["generators_used"] = cert.generators_used;
    return out;
}

int param_int(const CheckRequest& req, const std::string& key, int fallback) {
    const auto it = req.params.find(key);
    if (it == req.params.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw SpecError("check: parameter '" + key + "' must be an integer, got '" + it->second + "'");
    }
}

std::string param_str(const CheckRequest& req, const std::string& key) {
    const auto it = req.params.find(key);
    if (it == req.params.end()) throw SpecError("check '" + req.check + "' needs a '" + key + "' parameter");
    return it->second;
}

// The CLI cannot pass an arbitrary bilinear map, so the ds identities are
// exercised on a deterministic batch of maps (a, b) -> T(a o b), which vanish
// on two-sided pairs by construction.
Certificate run_verify_ds(const ProblemSetting& s, std::uint64_t seed, int samples) {
    const Algebra& A = s.algebra;
    Rng rng(seed);
    Certificate last;
    for (int t = 0; t < 5; ++t) {
        LinearMap T;
        T.src_dim = A.dim;
        T.tgt_dim = s.bimodule.dim;
        T.mat = Matrix(T.tgt_dim, T.src_dim);
        for (int i = 0; i < T.tgt_dim; ++i)
            for (int j = 0; j < T.src_dim; ++j) T.mat(i, j) = rng.small_scalar();
        BilinearMap phi = BilinearMap::zero(A.dim, T.tgt_dim);
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j) {
                const Vec val = T.apply(jordan(A, unit_vec(A.dim, i), unit_vec(A.dim, j)));
                for (int k = 0; k < T.tgt_dim; ++k) phi.at(i, j, k) = val[static_cast<std::size_t>(k)];
            }
        last = verify_ds_identities(A, phi, s.family, samples, seed);
        if (!last.certified()) return last;
    }
    last.dims["maps_checked"] = 5;
    return last;
}

json run_check(const CheckRequest& req, const ProblemSetting& s, std::uint64_t seed, int budget) {
    const Algebra& A = s.algebra;
    const Bimodule& M = s.bimodule;
    json rec;
    if (req.check == "check-zpd" || req.check == "check-zjpd") {
        const ProductKind kind = req.check == "check-zpd" ? ProductKind::ordinary : ProductKind::jordan;
        rec = certificate_json(check_zpd(A, kind, seed, budget, s.family));
    } else if (req.check == "check-im-span") {
        rec = certificate_json(check_full_idempotent_span(A, s.family));
    } else if (req.check == "check-condition-m") {
        rec = certificate_json(check_condition_m(A, M, IdealSpec{s.ideal}));
    } else if (req.check == "solve") {
        const ConditionTag tag = condition_tag_parse(param_str(req, "tag"));
        MapSpace space;
        switch (tag) {
            case ConditionTag::d1:
            case ConditionTag::d2:
            case ConditionTag::d3:
            case ConditionTag::d4:
                space = condition_space(A, M, tag, seed, budget, s.family);
                break;
            case ConditionTag::central_d1:
                space = central_d1_space(A, M);
                break;
            default:
                space = definition_space(A, M, tag);
                break;
        }
        rec["tag"] = condition_tag_str(tag);
        rec["space"] = subspace_json(space.space);
    } else if (req.check == "verify") {
        const std::string theorem = param_str(req, "theorem");
        if (theorem == "d1")
            rec = certificate_json(verify_theorem_d1(A, M, s.ideal, s.family, seed, budget));
        else if (theorem == "d2")
            rec = certificate_json(verify_theorem_d2(A, M, s.ideal, s.family, seed, budget));
        else if (theorem == "dd2")
            rec = certificate_json(verify_theorem_dd2(A, M, s.ideal, s.family, seed, budget));
        else if (theorem == "ds")
            rec = certificate_json(run_verify_ds(s, seed, param_int(req, "samples", 100)));
        else if (theorem == "prop-n")
            rec = certificate_json(check_prop_n(A, param_int(req, "target_dim", 1), seed, budget));
        else if (theorem == "lemma-f")
            rec = certificate_json(verify_lemma_f(A, M, param_int(req, "samples", 1000), seed));
        else
            throw SpecError("check: unknown theorem '" + theorem + "'");
        rec["theorem"] = theorem;
    } else {
        throw SpecError("check: unknown command '" + req.check + "'");
    }
    return rec;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

Report run(const RunConfig& config) {
    json body;
    body["tool"] = kToolVersion;
    body["seed"] = config.seed;
    json checks = json::array();
    json timings = json::array();
    bool any_refuted = false, any_error = false;

    for (const CheckRequest& req : config.checks) {
        json rec;
        rec["check"] = req.check;
        rec["spec"] = req.spec_path;
        if (!req.params.empty()) {
            json params;
            for (const auto& [k, v] : req.params) params[k] = v;
            rec["params"] = params;
        }
        rec["seed"] = config.seed;
        const auto started = std::chrono::steady_clock::now();
        try {
            std::ifstream in(req.spec_path, std::ios::binary);
            if (!in) throw SpecError("spec: cannot open '" + req.spec_path + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            rec["input_digest"] = fnv1a_hex(buffer.str());
            const ProblemSetting setting = parse_spec(buffer.str());
            if (!setting.name.empty()) rec["name"] = setting.name;
            const int budget = config.budget.value_or(default_budget(setting.algebra));
            rec["budget"] = budget;
            rec.update(run_check(req, setting, config.seed, budget));
            if (rec.contains("outcome") && rec["outcome"] == "refuted") any_refuted = true;
        } catch (const SpecError& e) {
            rec["error"] = e.what();
            any_error = true;
        } catch (const std::invalid_argument& e) {
            rec["error"] = e.what();
            any_error = true;
        }
        const auto elapsed = std::chrono::steady_clock::now() - started;
        timings.push_back(json{
            {"check", req.check},
            {"spec", req.spec_path},
            {"ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()},
        });
        checks.push_back(std::move(rec));
    }
    body["checks"] = checks;

    Report report;
    report.body = body.dump(2);
    report.timing = json{{"per_check", timings}}.dump(2);
    report.exit_code = any_error ? 2 : (any_refuted ? 1 : 0);
    return report;
}

std::string report_text(const Report& r) {
    // body stays a standalone JSON document; timing rides behind it so that
    // byte-comparing bodies needs no parsing
    return r.body + "\n" + r.timing + "\n";
}

}  // namespace zpdlab
