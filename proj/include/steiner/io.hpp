#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "horns.hpp"
#include "morphisms.hpp"

namespace steiner::io {

using Json = nlohmann::ordered_json;

// Coefficients that fit in 64 bits are plain numbers; larger ones are decimal strings.
inline Json integer_to_json(const Integer& c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return Json(c.convert_to<std::int64_t>());
    return Json(c.str());
}

inline Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorCode::MalformedInput, "expected an integer, got " + j.dump());
}

inline Json to_json(const GroupElement& x)
{
    Json out = Json::object();
    for (const auto& [b, c] : x.terms())
        out[x.basis()->id(b)] = integer_to_json(c);
    return out;
}

inline Json to_json(const Chain& x) { return to_json(x.value()); }

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorCode::MalformedInput, what);
}

inline GroupElement group_element_from_json(const BasisPtr& basis, const Json& j)
{
    require(j.is_object(), "chain must be an object");
    std::vector<Term> terms;
    for (const auto& [id, c] : j.items())
        terms.emplace_back(basis->at(id), integer_from_json(c));
    return terms.empty() ? GroupElement() : GroupElement(basis, std::move(terms));
}

inline Chain chain_from_json(const BasisPtr& basis, const Json& j) { return Chain(group_element_from_json(basis, j)); }

inline Json to_json(const Adc& k)
{
    const Basis& basis = *k.basis();
    Json out;
    Json elements = Json::array();
    Json diff = Json::object();
    Json aug = Json::object();
    for (std::uint32_t b = 0; b < basis.size(); ++b) {
        elements.push_back(Json{{"id", basis.id(b)}, {"dim", basis.dim(b)}});
        if (basis.dim(b) == 0)
            aug[basis.id(b)] = integer_to_json(k.augmentation_of(b));
        else
            diff[basis.id(b)] = to_json(k.boundary_of(b));
    }
    out["basis"] = elements;
    out["d"] = diff;
    out["e"] = aug;
    return out;
}

inline RawAdc raw_adc_from_json(const Json& j)
{
    require(j.is_object() && j.contains("basis") && j["basis"].is_array(), "ADC needs a basis array");
    RawAdc raw;
    for (const auto& b : j["basis"]) {
        require(b.is_object() && b.contains("id") && b["id"].is_string() && b.contains("dim") &&
                    b["dim"].is_number_integer(),
                "basis entries need a string id and an integer dim");
        raw.basis.emplace_back(b["id"].get<std::string>(), b["dim"].get<int>());
    }
    if (j.contains("d")) {
        require(j["d"].is_object(), "d must be an object");
        for (const auto& [id, image] : j["d"].items()) {
            require(image.is_object(), "boundary of " + id + " must be an object");
            auto& row = raw.diff[id];
            for (const auto& [t, c] : image.items())
                row[t] = integer_from_json(c);
        }
    }
    if (j.contains("e")) {
        require(j["e"].is_object(), "e must be an object");
        for (const auto& [id, c] : j["e"].items())
            raw.aug[id] = integer_from_json(c);
    }
    return raw;
}

inline Adc adc_from_json(const Json& j) { return validate_adc(raw_adc_from_json(j)); }

inline Json to_json(const SteinerTable& t)
{
    Json minus = Json::array();
    Json plus = Json::array();
    for (const auto& row : t.minus)
        minus.push_back(to_json(row));
    for (const auto& row : t.plus)
        plus.push_back(to_json(row));
    return Json{{"dim", t.dim}, {"minus", minus}, {"plus", plus}};
}

inline SteinerTable table_from_json(const BasisPtr& basis, const Json& j)
{
    require(j.is_object() && j.contains("dim") && j.contains("minus") && j.contains("plus"), "table fields");
    SteinerTable t;
    t.dim = j["dim"].get<int>();
    for (const auto& row : j["minus"])
        t.minus.push_back(chain_from_json(basis, row));
    for (const auto& row : j["plus"])
        t.plus.push_back(chain_from_json(basis, row));
    return t;
}

inline Json to_json(const ExpressionTree& t)
{
    if (t.is_generator()) {
        const auto& g = t.generator();
        Json out{{"gen", g.element.id()}};
        if (g.dim != g.element.dim())
            out["dim"] = g.dim;
        return out;
    }
    Json factors = Json::array();
    for (const auto& f : t.composite().factors)
        factors.push_back(to_json(f));
    return Json{{"k", t.composite().k}, {"factors", factors}};
}

inline ExpressionTree tree_from_json(const BasisPtr& basis, const Json& j)
{
    require(j.is_object(), "tree node must be an object");
    if (j.contains("gen")) {
        auto b = basis->at(j["gen"].get<std::string>());
        int dim = j.contains("dim") ? j["dim"].get<int>() : basis->dim(b);
        return ExpressionTree{Generator{{basis, b}, dim}};
    }
    require(j.contains("k") && j.contains("factors") && j["factors"].is_array() && !j["factors"].empty(),
            "composite node needs k and non-empty factors");
    Composite node{j["k"].get<int>(), {}};
    for (const auto& f : j["factors"])
        node.factors.push_back(tree_from_json(basis, f));
    return ExpressionTree{std::move(node)};
}

inline Json to_json(const SimplicialSet& s)
{
    Json simplices = Json::array();
    for (const auto& x : s.simplices()) {
        Json faces = Json::array();
        for (const auto& f : x.faces)
            faces.push_back(f ? Json(s.simplex(*f).id) : Json(nullptr));
        Json entry{{"id", x.id}, {"dim", x.dim}, {"faces", faces}};
        if (!x.vertices.empty())
            entry["vertices"] = x.vertices;
        simplices.push_back(entry);
    }
    return Json{{"simplices", simplices}};
}

inline SimplicialSet simplicial_from_json(const Json& j, const std::string& name = "input")
{
    require(j.is_object() && j.contains("simplices") && j["simplices"].is_array(), "simplices array");
    std::vector<RawSimplex> raw;
    for (const auto& e : j["simplices"]) {
        RawSimplex r;
        r.id = e.at("id").get<std::string>();
        r.dim = e.at("dim").get<int>();
        if (e.contains("faces"))
            for (const auto& f : e["faces"])
                r.faces.push_back(f.is_null() ? std::nullopt : std::optional<std::string>(f.get<std::string>()));
        if (e.contains("vertices"))
            r.vertices = e["vertices"].get<std::vector<int>>();
        raw.push_back(std::move(r));
    }
    return SimplicialSet::make(name, raw);
}

inline Json to_json(const AdcMorphism& f)
{
    Json images = Json::object();
    const Basis& src = *f.source().basis();
    for (std::uint32_t b = 0; b < src.size(); ++b)
        images[src.id(b)] = to_json(f.image(b));
    return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"images", images}};
}

inline AdcMorphism morphism_from_json(const Json& j)
{
    require(j.is_object() && j.contains("source") && j.contains("target") && j.contains("images"), "morphism fields");
    RawMorphism raw{adc_from_json(j["source"]), adc_from_json(j["target"]), {}};
    for (const auto& [id, image] : j["images"].items()) {
        auto& row = raw.images[id];
        for (const auto& [t, c] : image.items())
            row[t] = integer_from_json(c);
    }
    return validate_morphism(raw);
}

inline Json to_json(const ComplicialCheck& c)
{
    Json out{{"n", c.n}, {"i", c.i}, {"k", c.k}, {"kind", c.kind}, {"ok", c.ok}};
    if (!c.violations.empty())
        out["violations"] = c.violations;
    return out;
}

inline Json to_json(const HornEquation& eq)
{
    return Json{{"n", eq.n},
                {"i", eq.i},
                {"alpha", std::string(1, sign_char(eq.alpha))},
                {"missing", eq.missing},
                {"template", eq.templ},
                {"template_reduced", eq.templ_reduced},
                {"rhs", to_json(eq.rhs)},
                {"equation", eq.equation},
                {"substitution_ok", eq.substitution_ok}};
}

} // namespace steiner::io
