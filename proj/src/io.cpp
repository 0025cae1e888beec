#include "ehrhart/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace ehrhart {

namespace {

// ---- family spec grammar -------------------------------------------------

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    LatticePolytope parse() {
        LatticePolytope result = spec();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("family spec: " + message, "position " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a family name");
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned long number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a natural number");
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 9) {
            pos_ = start;
            fail("number too large");
        }
        return std::stoul(digits);
    }

    LatticePolytope spec() {
        const std::size_t start = pos_;
        const std::string name = word();
        try {
            if (name == "cube" || name == "cross" || name == "pn" || name == "qn") {
                expect(':');
                const auto n = static_cast<unsigned>(number());
                if (name == "cube") return cube(n);
                if (name == "cross") return crosspolytope(n);
                if (name == "pn") return pn_family(n);
                return qn_family(n);
            }
            if (name == "product") {
                expect('(');
                LatticePolytope first = spec();
                expect(',');
                LatticePolytope second = spec();
                expect(')');
                return product(first, second);
            }
            if (name == "dilate") {
                expect('(');
                LatticePolytope inner = spec();
                expect(',');
                const unsigned long k = number();
                expect(')');
                return dilate(inner, Integer(k));
            }
            if (name == "bipyramid") {
                expect('(');
                LatticePolytope base = spec();
                expect(')');
                return bipyramid(base);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            pos_ = start;
            fail(e.what());
        }
        pos_ = start;
        fail("unknown family '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---- JSON helpers ---------------------------------------------------------

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

Integer integer_from_json(const Json& value, const std::string& path) {
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? Integer(value.get<unsigned long>()) : Integer(value.get<long>());
    }
    if (value.is_string()) {
        try {
            return parse_integer(value.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw ParseError("expected an integer", path);
}

Json integer_to_json(const Integer& value) {
    if (value.fits_slong_p()) return value.get_si();
    return value.get_str();
}

const Json& required(const Json& doc, const std::string& key, const std::string& path) {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError("missing field '" + key + "'", path);
    return doc.at(key);
}

IntVector int_vector_from_json(const Json& value, const std::string& path) {
    if (!value.is_array()) throw ParseError("expected an array of integers", path);
    IntVector out;
    for (std::size_t i = 0; i < value.size(); ++i) out.push_back(integer_from_json(value[i], child(path, i)));
    return out;
}

Json int_vector_to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer_to_json(x));
    return out;
}

unsigned small_natural(const Json& value, const std::string& path) {
    const Integer n = integer_from_json(value, path);
    if (n < 0 || n > 1000000) throw ParseError("expected a small natural number", path);
    return static_cast<unsigned>(n.get_ui());
}

LatticePolytope family_from_json(const Json& family, const std::string& path) {
    const Json& tag_json = required(family, "tag", path);
    if (!tag_json.is_string()) throw ParseError("family tag must be a string", child(path, "tag"));
    const std::string tag = tag_json.get<std::string>();
    const std::string params_path = child(path, "params");
    const Json params = family.contains("params") ? family.at("params") : Json::object();
    if (!params.is_object()) throw ParseError("family params must be an object", params_path);

    Integer scale = 1;
    if (params.contains("scale")) {
        scale = integer_from_json(params.at("scale"), child(params_path, "scale"));
        if (scale < 1) throw ParseError("scale must be >= 1", child(params_path, "scale"));
    }

    try {
        auto finish = [&](LatticePolytope p) { return scale == 1 ? p : dilate(p, scale); };
        if (tag == "cube" || tag == "cross" || tag == "pn" || tag == "qn") {
            const unsigned n = small_natural(required(params, "n", params_path), child(params_path, "n"));
            if (tag == "cube") return finish(cube(n));
            if (tag == "cross") return finish(crosspolytope(n));
            if (tag == "pn") return finish(pn_family(n));
            return finish(qn_family(n));
        }
        if (tag == "product") {
            const Json& factors = required(params, "factors", params_path);
            const std::string factors_path = child(params_path, "factors");
            if (!factors.is_array() || factors.size() != 2) {
                throw ParseError("product needs exactly two factors", factors_path);
            }
            return finish(product(polytope_from_json(factors[0]), polytope_from_json(factors[1])));
        }
        if (tag == "bipyramid") {
            return finish(bipyramid(polytope_from_json(required(params, "base", params_path))));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), path);
    }
    throw ParseError("unknown family tag '" + tag + "'", child(path, "tag"));
}

std::vector<IntVector> sorted(std::vector<IntVector> vs) {
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::vector<Halfspace> sorted(std::vector<Halfspace> hs) {
    std::sort(hs.begin(), hs.end(), [](const Halfspace& a, const Halfspace& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.rhs < b.rhs;
    });
    return hs;
}

} // namespace

LatticePolytope parse_family_spec(std::string_view spec) { return SpecParser(spec).parse(); }

LatticePolytope polytope_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("polytope must be a JSON object", "/");
    const unsigned dimension = small_natural(required(doc, "dimension", "/"), "/dimension");

    std::optional<std::vector<IntVector>> vertices;
    if (doc.contains("vertices")) {
        const Json& vs = doc.at("vertices");
        if (!vs.is_array()) throw ParseError("vertices must be an array", "/vertices");
        vertices.emplace();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            vertices->push_back(int_vector_from_json(vs[i], child("/vertices", i)));
            if (vertices->back().size() != dimension) {
                throw ParseError("vertex has " + std::to_string(vertices->back().size()) +
                                     " coordinates, expected " + std::to_string(dimension),
                                 child("/vertices", i));
            }
        }
    }

    std::optional<std::vector<Halfspace>> halfspaces;
    if (doc.contains("halfspaces")) {
        const Json& hs = doc.at("halfspaces");
        if (!hs.is_array()) throw ParseError("halfspaces must be an array", "/halfspaces");
        halfspaces.emplace();
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const std::string path = child("/halfspaces", i);
            Halfspace h{int_vector_from_json(required(hs[i], "normal", path), child(path, "normal")),
                        integer_from_json(required(hs[i], "rhs", path), child(path, "rhs"))};
            if (h.normal.size() != dimension) {
                throw ParseError("normal has wrong length", child(path, "normal"));
            }
            halfspaces->push_back(std::move(h));
        }
    }

    if (doc.contains("family") && !(doc.at("family").is_object() && doc.at("family").value("tag", "") == "generic")) {
        LatticePolytope built = family_from_json(doc.at("family"), "/family");
        if (built.dimension() != dimension) {
            throw ParseError("dimension " + std::to_string(dimension) + " does not match the family (" +
                                 std::to_string(built.dimension()) + ")",
                             "/dimension");
        }
        if (vertices && sorted(*vertices) != sorted(built.vertices())) {
            throw ParseError("vertices are inconsistent with the family", "/vertices");
        }
        if (halfspaces && (!built.halfspaces() || sorted(*halfspaces) != sorted(*built.halfspaces()))) {
            throw ParseError("halfspaces are inconsistent with the family", "/halfspaces");
        }
        return built;
    }

    if (!vertices) throw ParseError("missing field 'vertices'", "/");
    try {
        return LatticePolytope(dimension, std::move(*vertices), std::move(halfspaces));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), "/");
    }
}

Json polytope_to_json(const LatticePolytope& polytope) {
    Json doc;
    doc["dimension"] = polytope.dimension();
    Json vertices = Json::array();
    for (const auto& v : polytope.vertices()) vertices.push_back(int_vector_to_json(v));
    doc["vertices"] = std::move(vertices);
    if (polytope.halfspaces()) {
        Json hs = Json::array();
        for (const auto& h : *polytope.halfspaces()) {
            hs.push_back(Json{{"normal", int_vector_to_json(h.normal)}, {"rhs", integer_to_json(h.rhs)}});
        }
        doc["halfspaces"] = std::move(hs);
    }
    const FamilyTag& tag = polytope.family();
    if (tag.kind != FamilyKind::Generic) {
        Json params = Json::object();
        switch (tag.kind) {
        case FamilyKind::Product:
            params["factors"] = Json::array({polytope_to_json(*tag.parts[0]), polytope_to_json(*tag.parts[1])});
            break;
        case FamilyKind::Bipyramid:
            params["base"] = polytope_to_json(*tag.parts[0]);
            break;
        default:
            params["n"] = tag.n;
            break;
        }
        params["scale"] = integer_to_json(tag.scale);
        doc["family"] = Json{{"tag", to_string(tag.kind)}, {"params", std::move(params)}};
    }
    return doc;
}

Json ehrhart_to_json(const EhrhartPolynomial& ehr) {
    Json coeffs = Json::array();
    for (const auto& c : ehr.polynomial().coefficients()) coeffs.push_back(c.to_string());
    return Json{{"dimension", ehr.dimension()}, {"coefficients", std::move(coeffs)}};
}

EhrhartPolynomial ehrhart_from_json(const Json& doc) {
    const unsigned dimension = small_natural(required(doc, "dimension", "/"), "/dimension");
    const Json& coeffs = required(doc, "coefficients", "/");
    if (!coeffs.is_array()) throw ParseError("coefficients must be an array", "/coefficients");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::string path = child("/coefficients", i);
        if (!coeffs[i].is_string()) throw ParseError("coefficient must be a fraction string", path);
        try {
            values.push_back(Rational::parse(coeffs[i].get<std::string>()));
        } catch (const std::exception& e) {
            throw ParseError(e.what(), path);
        }
    }
    try {
        return EhrhartPolynomial(dimension, Polynomial(std::move(values)));
    } catch (const std::logic_error& e) {
        throw ParseError(e.what(), "/coefficients");
    }
}

std::string format_decimal(double value, int digits) {
    const double unit = std::pow(10.0, -digits);
    if (std::fabs(value) < unit / 2) value = 0.0;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    std::string out(buffer);
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

Json roots_to_json(const RootSet& roots) {
    Json list = Json::array();
    for (const auto& z : roots.roots) {
        list.push_back(Json{{"re", format_decimal(z.real())}, {"im", format_decimal(z.imag())}});
    }
    char residual[32];
    std::snprintf(residual, sizeof residual, "%.3e", roots.residual_bound);
    return Json{{"degree", roots.source_degree},
                {"precision", 12},
                {"roots", std::move(list)},
                {"residual_bound", residual}};
}

Json wills_to_json(const WillsVerdict& verdict) {
    Json rows = Json::array();
    for (const auto& e : verdict.per_index) {
        rows.push_back(Json{{"i", e.i},
                            {"coefficient", e.coefficient.to_string()},
                            {"bound", e.bound.to_string()},
                            {"holds", e.holds}});
    }
    Json violated = Json::array();
    for (auto i : verdict.violated_indices()) violated.push_back(i);
    return Json{{"dimension", verdict.dimension},
                {"per_index", std::move(rows)},
                {"violated_indices", std::move(violated)},
                {"overall", verdict.overall}};
}

Json inequality_to_json(const InequalityVerdict& verdict) {
    return Json{{"lhs", verdict.lhs.to_string()},
                {"rhs", verdict.rhs.to_string()},
                {"holds", verdict.holds},
                {"is_equality", verdict.is_equality}};
}

Json reflexivity_to_json(const ReflexivityReport& report) {
    return Json{{"index_l", integer_to_json(report.index_l)},
                {"def_check", report.def_check},
                {"polar_check", report.polar_check},
                {"coefficient_check", report.coefficient_check},
                {"agree", report.agree},
                {"coefficient_lhs", report.coefficient_lhs.to_string()},
                {"coefficient_rhs", report.coefficient_rhs.to_string()},
                {"vertices_primitive", report.vertices_primitive},
                {"uniform_rhs", report.uniform_rhs},
                {"polar_vertices_primitive", report.polar_vertices_primitive}};
}

} // namespace ehrhart
