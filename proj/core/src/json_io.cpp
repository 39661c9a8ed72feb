#include "qzeta/json_io.hpp"

#include <json.hpp>

namespace qzeta {

using nlohmann::json;

namespace {

json rational_json(const Rational& r)
{
    auto [n, d] = to_string_pair(r);
    return json::array({n, d});
}

Rational rational_from(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw std::invalid_argument("rational must be [\"num\",\"den\"]");
    return from_string_pair(j[0].get<std::string>(), j[1].get<std::string>());
}

json header(int order)
{
    json j = json::object();
    j["var"] = "q";
    j["order"] = order;
    return j;
}

json parse_doc(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("var", "") != "q" || !j.contains("order") || !j["order"].is_number_integer() ||
        !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("not a q-series document");
    if (j["coeffs"].size() != j["order"].get<std::size_t>() + 1)
        throw std::invalid_argument("coefficient count does not match order");
    return j;
}

}  // namespace

std::string to_json(const RSeries& s)
{
    json j = header(s.order());
    json c = json::array();
    for (const auto& x : s.coeffs()) c.push_back(rational_json(x));
    j["coeffs"] = std::move(c);
    return j.dump();
}

std::string to_json(const PSeries& s)
{
    SymbolTablePtr table;
    for (const auto& p : s.coeffs())
        if (p.table()) table = p.table();
    std::size_t arity = table ? table->size() : 0;
    json j = header(s.order());
    j["symbols"] = table ? json(table->names()) : json::array();
    json c = json::array();
    for (const auto& p : s.coeffs()) {
        json terms = json::array();
        for (const auto& [m, r] : p.terms())
            terms.push_back({{"coef", rational_json(r)}, {"exps", monomial_exponents(m, arity)}});
        c.push_back(std::move(terms));
    }
    j["coeffs"] = std::move(c);
    return j.dump();
}

RSeries rseries_from_json(const std::string& text)
{
    json j = parse_doc(text);
    RSeries s(j["order"].get<int>());
    for (int n = 0; n <= s.order(); ++n) s[n] = rational_from(j["coeffs"][n]);
    return s;
}

PSeries pseries_from_json(const std::string& text)
{
    json j = parse_doc(text);
    std::vector<std::string> names;
    if (j.contains("symbols")) names = j["symbols"].get<std::vector<std::string>>();
    SymbolTablePtr table = names.empty() ? nullptr : make_symbol_table(names);
    PSeries s(j["order"].get<int>());
    for (int n = 0; n <= s.order(); ++n) {
        std::vector<MPoly::Term> terms;
        for (const auto& t : j["coeffs"][n]) {
            auto exps = t.at("exps").get<std::vector<unsigned>>();
            if (exps.size() != names.size()) throw std::invalid_argument("exponent vector has wrong arity");
            terms.emplace_back(make_monomial(exps), rational_from(t.at("coef")));
        }
        s[n] = MPoly(table, std::move(terms));
    }
    return s;
}

}  // namespace qzeta
