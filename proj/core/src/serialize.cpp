#include "hyperalg/serialize.hpp"

#include <algorithm>
#include <cstring>
#include <variant>

namespace hyperalg {

namespace {

std::vector<Cplx> cplx_list_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
    std::vector<Cplx> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(cplx_from_json(x, what));
    return out;
}

Json cplx_list_to_json(const std::vector<Cplx>& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(cplx_to_json(z));
    return a;
}

}  // namespace

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) throw SchemaError(std::string(what) + ": expected an object");
    for (const auto& item : j.items()) {
        const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                    [&](const char* k) { return item.key() == k; });
        if (!ok) throw SchemaError(std::string(what) + ": unknown field '" + item.key() + "'");
    }
}

const Json& require_field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

Json cplx_to_json(Cplx z) { return Json::array({z.real(), z.imag()}); }

Cplx cplx_from_json(const Json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SchemaError(std::string(what) + ": complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json exppoly_to_json(const ExpPoly& f) {
    Json a = Json::array();
    for (const auto& t : f.terms()) a.push_back({{"coeff", cplx_to_json(t.coeff)}, {"freq", cplx_to_json(t.freq)}});
    return a;
}

ExpPoly exppoly_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("exp-poly: expected an array of terms");
    std::vector<Term> terms;
    for (const auto& t : j) {
        require_keys(t, {"coeff", "freq"}, "exp-poly term");
        terms.push_back({cplx_from_json(require_field(t, "coeff", "exp-poly term"), "coeff"),
                         cplx_from_json(require_field(t, "freq", "exp-poly term"), "freq")});
    }
    return ExpPoly(std::move(terms));
}

Json symbol_to_json(const SymbolSpec& phi) {
    Json j;
    if (const auto* c = phi.as<CatalogSymbol>()) {
        j["kind"] = "catalog";
        j["name"] = catalog_name(c->kind);
        j["a"] = cplx_to_json(c->a);
        j["poly"] = cplx_list_to_json(c->poly);
        j["scale"] = cplx_to_json(c->scale);
    } else if (const auto* e = phi.as<ExpPolySymbol>()) {
        j["kind"] = "exp_poly";
        j["terms"] = exppoly_to_json(e->f);
    } else if (const auto* p = phi.as<PolyTimesExp>()) {
        j["kind"] = "poly_times_exp";
        j["poly"] = cplx_list_to_json(p->poly);
        j["a"] = cplx_to_json(p->a);
        j["b"] = cplx_to_json(p->b);
    } else if (const auto* h = phi.as<HadamardTrunc>()) {
        j["kind"] = "hadamard";
        j["a"] = cplx_to_json(h->a);
        j["b"] = cplx_to_json(h->b);
        j["zeros"] = cplx_list_to_json(h->zeros);
        j["genus"] = h->genus;
        j["truncation"] = h->truncation;
    }
    return j;
}

SymbolSpec symbol_from_json(const Json& j) {
    const std::string kind = require_field(j, "kind", "symbol").get<std::string>();
    if (kind == "catalog") {
        require_keys(j, {"kind", "name", "a", "poly", "scale"}, "catalog symbol");
        const std::string name = require_field(j, "name", "catalog symbol").get<std::string>();
        auto k = catalog_kind_from_name(name);
        if (!k) throw SchemaError("catalog symbol: unknown name '" + name + "'");
        CatalogSymbol c{*k};
        if (j.contains("a")) c.a = cplx_from_json(j["a"], "a");
        if (j.contains("poly")) c.poly = cplx_list_from_json(j["poly"], "poly");
        if (j.contains("scale")) c.scale = cplx_from_json(j["scale"], "scale");
        return SymbolSpec(c);
    }
    if (kind == "exp_poly") {
        require_keys(j, {"kind", "terms"}, "exp_poly symbol");
        return SymbolSpec::exp_poly(exppoly_from_json(require_field(j, "terms", "exp_poly symbol")));
    }
    if (kind == "poly_times_exp") {
        require_keys(j, {"kind", "poly", "a", "b"}, "poly_times_exp symbol");
        Cplx b = j.contains("b") ? cplx_from_json(j["b"], "b") : Cplx(0.0, 0.0);
        return SymbolSpec::poly_times_exp(cplx_list_from_json(require_field(j, "poly", "poly_times_exp"), "poly"),
                                          cplx_from_json(require_field(j, "a", "poly_times_exp"), "a"), b);
    }
    if (kind == "hadamard") {
        require_keys(j, {"kind", "a", "b", "zeros", "genus", "truncation"}, "hadamard symbol");
        auto zeros = cplx_list_from_json(require_field(j, "zeros", "hadamard symbol"), "zeros");
        const std::size_t trunc =
            j.contains("truncation") ? j["truncation"].get<std::size_t>() : zeros.size();
        return SymbolSpec::hadamard(cplx_from_json(require_field(j, "a", "hadamard symbol"), "a"),
                                    j.contains("b") ? cplx_from_json(j["b"], "b") : Cplx(0.0, 0.0),
                                    std::move(zeros), require_field(j, "genus", "hadamard symbol").get<int>(),
                                    trunc);
    }
    throw SchemaError("symbol: unknown kind '" + kind + "'");
}

Json grid_to_json(const DiskGrid& g) {
    return {{"radius", g.radius}, {"samples", g.samples}, {"circles", g.circles}};
}

DiskGrid grid_from_json(const Json& j) {
    require_keys(j, {"radius", "samples", "circles"}, "grid");
    DiskGrid g;
    if (j.contains("radius")) g.radius = j["radius"].get<double>();
    if (j.contains("samples")) g.samples = j["samples"].get<int>();
    if (j.contains("circles")) g.circles = j["circles"].get<int>();
    g.validate();
    return g;
}

}  // namespace hyperalg
