#include "zpdlab/specdoc.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace zpdlab {

namespace {

using nlohmann::json;

constexpr int kMaxAmbient = 6;  // keeps exact solves at desk scale

int parse_order(const std::string& s, std::size_t open, std::size_t close, const std::string& what) {
    int n = 0;
    try {
        n = std::stoi(s.substr(open + 1, close - open - 1));
    } catch (const std::exception&) {
        throw SpecError("spec: malformed " + what + " reference '" + s + "'");
    }
    if (n < 1 || n > kMaxAmbient)
        throw SpecError("spec: " + what + " order must be between 1 and " + std::to_string(kMaxAmbient));
    return n;
}

Algebra algebra_by_name(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "remark") return remark_bimodule().algebra;
    const std::size_t open = s.find('('), close = s.rfind(')');
    if (open == std::string::npos || close != s.size() - 1)
        throw SpecError("spec: unknown algebra reference '" + raw + "'");
    const std::string head = s.substr(0, open);
    if (head == "matrix") return matrix_algebra(parse_order(s, open, close, "matrix"));
    if (head == "triangular") return triangular_algebra(parse_order(s, open, close, "triangular"));
    if (head == "block") {
        if (s[open + 1] != '[' || s[close - 1] != ']')
            throw SpecError("spec: block reference needs a partition, e.g. block([2,1])");
        std::vector<int> part;
        int total = 0;
        std::stringstream ss(s.substr(open + 2, close - open - 3));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                part.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw SpecError("spec: malformed block partition in '" + raw + "'");
            }
            total += part.back();
        }
        if (part.empty() || total > kMaxAmbient)
            throw SpecError("spec: block partition must be nonempty with total at most " +
                            std::to_string(kMaxAmbient));
        return block_triangular(part);
    }
    throw SpecError("spec: unknown algebra reference '" + raw + "'");
}

Scalar scalar_field(const json& j, const std::string& where) {
    if (!j.is_string()) throw SpecError("spec: " + where + ": scalars must be strings like \"1/2+3/4 i\"");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SpecError("spec: " + where + ": " + e.what());
    }
}

Vec vec_field(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw SpecError("spec: " + where + ": expected an array of " + std::to_string(dim) + " scalars");
    Vec v;
    v.reserve(j.size());
    for (const json& c : j) v.push_back(scalar_field(c, where));
    return v;
}

std::vector<Scalar> tensor_field(const json& j, int d1, int d2, int d3, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != d1)
        throw SpecError("spec: " + where + ": expected " + std::to_string(d1) + " slices");
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(d1) * d2 * d3);
    for (const json& slice : j) {
        if (!slice.is_array() || static_cast<int>(slice.size()) != d2)
            throw SpecError("spec: " + where + ": expected " + std::to_string(d2) + " rows per slice");
        for (const json& row : slice) {
            const Vec v = vec_field(row, d3, where);
            out.insert(out.end(), v.begin(), v.end());
        }
    }
    return out;
}

Algebra algebra_from_json(const json& j) {
    if (j.is_string()) return algebra_by_name(j.get<std::string>());
    if (!j.is_object()) throw SpecError("spec: 'algebra' must be a reference string or an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw SpecError("spec: explicit algebra needs an integer 'dim'");
    Algebra A;
    A.dim = j["dim"].get<int>();
    if (A.dim < 1 || A.dim > kMaxAmbient * kMaxAmbient) throw SpecError("spec: algebra dim out of range");
    if (!j.contains("unit") || !j.contains("structure"))
        throw SpecError("spec: explicit algebra needs 'unit' and 'structure'");
    A.unit = vec_field(j["unit"], A.dim, "unit");
    A.structure = tensor_field(j["structure"], A.dim, A.dim, A.dim, "structure");
    if (j.contains("labels")) {
        const json& ls = j["labels"];
        if (!ls.is_array() || static_cast<int>(ls.size()) != A.dim)
            throw SpecError("spec: 'labels' must list one name per basis element");
        for (const json& l : ls) A.labels.push_back(l.get<std::string>());
    } else {
        for (int i = 0; i < A.dim; ++i) A.labels.push_back("e" + std::to_string(i + 1));
    }
    if (j.contains("units")) {
        const json& u = j["units"];
        if (!u.is_object() || !u.contains("ambient") || !u.contains("positions"))
            throw SpecError("spec: 'units' needs 'ambient' and 'positions'");
        MatrixUnits mu;
        mu.ambient = u["ambient"].get<int>();
        if (mu.ambient < 1 || mu.ambient > kMaxAmbient) throw SpecError("spec: units ambient out of range");
        if (!u["positions"].is_array() || static_cast<int>(u["positions"].size()) != A.dim)
            throw SpecError("spec: 'positions' must list one (row, col) per basis element");
        for (const json& p : u["positions"]) {
            if (!p.is_array() || p.size() != 2) throw SpecError("spec: each position is a [row, col] pair");
            const int r = p[0].get<int>(), c = p[1].get<int>();
            if (r < 0 || c < 0 || r >= mu.ambient || c >= mu.ambient)
                throw SpecError("spec: position out of the ambient range");
            mu.pos.emplace_back(r, c);
        }
        A.units = std::move(mu);
    }
    const Certificate cert = verify_algebra(A);
    if (!cert.certified()) throw SpecError("spec: algebra rejected: " + cert.detail);
    return A;
}

Bimodule bimodule_from_json(const json& j, const Algebra& A, bool algebra_is_remark) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "regular") return regular_bimodule(A);
        if (s == "ambient") {
            if (!A.units) throw SpecError("spec: 'ambient' bimodule needs a matrix-unit algebra");
            return ambient_matrix_bimodule(A);
        }
        if (s == "remark") {
            if (!algebra_is_remark)
                throw SpecError("spec: the 'remark' bimodule only pairs with the 'remark' algebra");
            return remark_bimodule().bimodule;
        }
        throw SpecError("spec: unknown bimodule reference '" + s + "'");
    }
    if (!j.is_object()) throw SpecError("spec: 'bimodule' must be a reference string or an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw SpecError("spec: explicit bimodule needs an integer 'dim'");
    Bimodule M;
    M.alg_dim = A.dim;
    M.dim = j["dim"].get<int>();
    if (M.dim < 1 || M.dim > kMaxAmbient * kMaxAmbient) throw SpecError("spec: bimodule dim out of range");
    if (!j.contains("left") || !j.contains("right"))
        throw SpecError("spec: explicit bimodule needs 'left' and 'right' action tensors");
    M.left = tensor_field(j["left"], A.dim, M.dim, M.dim, "left");
    M.right = tensor_field(j["right"], M.dim, A.dim, M.dim, "right");
    const Certificate cert = verify_bimodule(A, M);
    if (!cert.certified()) throw SpecError("spec: bimodule rejected: " + cert.detail);
    return M;
}

Vec element_from_json(const json& j, const Algebra& A, const std::string& where) {
    if (j.is_string()) {
        const auto idx = A.label_index(j.get<std::string>());
        if (!idx) throw SpecError("spec: " + where + ": unknown basis label '" + j.get<std::string>() + "'");
        return unit_vec(A.dim, *idx);
    }
    return vec_field(j, A.dim, where);
}

}  // namespace

ProblemSetting parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("spec: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("algebra"))
        throw SpecError("spec: document must be an object with an 'algebra' field");

    ProblemSetting s;
    if (doc.contains("name")) s.name = doc["name"].get<std::string>();
    s.algebra = algebra_from_json(doc["algebra"]);
    const bool algebra_is_remark = doc["algebra"].is_string() && doc["algebra"].get<std::string>() == "remark";
    if (doc.contains("bimodule"))
        s.bimodule = bimodule_from_json(doc["bimodule"], s.algebra, algebra_is_remark);
    else if (algebra_is_remark)
        s.bimodule = remark_bimodule().bimodule;
    else
        s.bimodule = regular_bimodule(s.algebra);

    if (doc.contains("ideal") && !(doc["ideal"].is_string() && doc["ideal"].get<std::string>() == "full")) {
        const json& rows = doc["ideal"];
        if (!rows.is_array()) throw SpecError("spec: 'ideal' must be \"full\" or an array of rows");
        std::vector<Vec> basis;
        for (const json& r : rows) basis.push_back(element_from_json(r, s.algebra, "ideal"));
        s.ideal = Subspace::from_rows(s.algebra.dim, basis);
    } else {
        s.ideal = Subspace::full(s.algebra.dim);
    }
    try {
        validate_ideal(s.algebra, s.ideal);
    } catch (const std::invalid_argument& e) {
        throw SpecError("spec: " + std::string(e.what()));
    }

    if (doc.contains("family") && !(doc["family"].is_string() && doc["family"].get<std::string>() == "standard")) {
        const json& elems = doc["family"];
        if (!elems.is_array()) throw SpecError("spec: 'family' must be \"standard\" or an array of elements");
        for (const json& e : elems) s.family.elements.push_back(element_from_json(e, s.algebra, "family"));
        for (const Vec& p : s.family.elements)
            if (!is_idempotent(s.algebra, p))
                throw SpecError("spec: family element is not idempotent: " + vec_str(p));
    } else {
        s.family = default_family(s.algebra);
    }
    return s;
}

ProblemSetting parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError("spec: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

}  // namespace zpdlab
