#include "probstirling/table_io.hpp"

#include "probstirling/euler_basis.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace probstirling {

using nlohmann::json;

std::string to_string(TableKind kind) {
    switch (kind) {
    case TableKind::S2Y: return "S2Y";
    case TableKind::S1Y: return "S1Y";
    case TableKind::S2YL: return "S2YL";
    case TableKind::S1YL: return "S1YL";
    case TableKind::Cumulants: return "CUMULANTS";
    case TableKind::Euler: return "EULER";
    case TableKind::AdellBenyi: return "ADELL_BENYI";
    }
    throw std::logic_error("unreachable");
}

TableKind parse_table_kind(std::string_view text) {
    if (text == "S2Y") return TableKind::S2Y;
    if (text == "S1Y") return TableKind::S1Y;
    if (text == "S2YL") return TableKind::S2YL;
    if (text == "S1YL") return TableKind::S1YL;
    if (text == "CUMULANTS") return TableKind::Cumulants;
    if (text == "EULER") return TableKind::Euler;
    if (text == "ADELL_BENYI") return TableKind::AdellBenyi;
    throw std::invalid_argument("unknown table kind '" + std::string(text) + "'");
}

bool table_kind_is_degenerate(TableKind kind) {
    return kind == TableKind::S2YL || kind == TableKind::S1YL;
}

TableDocument build_table(const RVSpec& rv, TableKind kind, const Rational& lambda, int order) {
    if (!lambda.is_zero() && !table_kind_is_degenerate(kind))
        throw std::invalid_argument("lambda applies only to the degenerate kinds S2YL and S1YL");
    TableDocument doc;
    doc.rv = to_string(rv);
    doc.kind = kind;
    doc.order = order;
    if (table_kind_is_degenerate(kind)) doc.lambda = lambda.str();

    const auto push_triangle = [&](const Triangle& t) {
        for (int n = 0; n <= t.max_n(); ++n)
            for (int k = 0; k <= n; ++k)
                doc.entries.push_back({n, k, t.at(n, k).str()});
    };

    switch (kind) {
    case TableKind::S2Y: push_triangle(s2y_triangle(rv, order)); break;
    case TableKind::S1Y:
        if (std::holds_alternative<UniformRV>(rv)) doc.note = "generic-only";
        push_triangle(s1y_triangle(rv, order));
        break;
    case TableKind::S2YL: push_triangle(s2y_degen_triangle(rv, lambda, order)); break;
    case TableKind::S1YL:
        if (std::holds_alternative<UniformRV>(rv)) doc.note = "generic-only";
        push_triangle(s1y_degen_triangle(rv, lambda, order));
        break;
    case TableKind::Cumulants: {
        const CumulantSequence kappa = cumulants(rv, order);
        for (int n = 1; n <= order; ++n)
            doc.entries.push_back({n, std::nullopt, kappa.at(n).str()});
        break;
    }
    case TableKind::Euler: {
        for (int n = 0; n <= order; ++n) {
            const Poly e = euler_poly(rv, n);
            for (int k = 0; k <= n; ++k) doc.entries.push_back({n, k, e.coeff(k).str()});
        }
        break;
    }
    case TableKind::AdellBenyi: {
        for (int n = 0; n <= order; ++n)
            for (int k = 0; k <= n; ++k)
                doc.entries.push_back({n, k, adell_benyi_s(rv, n, k).str()});
        break;
    }
    }
    return doc;
}

std::string to_json(const TableDocument& doc, bool with_float) {
    json j;
    j["rv"] = doc.rv;
    j["kind"] = to_string(doc.kind);
    if (doc.lambda) j["lambda"] = *doc.lambda;
    j["order"] = doc.order;
    if (doc.note) j["note"] = *doc.note;
    j["entries"] = json::array();
    for (const auto& e : doc.entries) {
        json je;
        je["n"] = e.n;
        if (e.k) je["k"] = *e.k;
        je["value"] = e.value;
        if (with_float) je["value_float"] = Rational::parse(e.value).to_double();
        j["entries"].push_back(std::move(je));
    }
    return j.dump(2);
}

TableDocument from_json(const std::string& text) {
    const json j = json::parse(text);
    TableDocument doc;
    doc.rv = j.at("rv").get<std::string>();
    doc.kind = parse_table_kind(j.at("kind").get<std::string>());
    if (j.contains("lambda")) doc.lambda = j.at("lambda").get<std::string>();
    doc.order = j.at("order").get<int>();
    if (j.contains("note")) doc.note = j.at("note").get<std::string>();
    for (const auto& je : j.at("entries")) {
        TableEntry e;
        e.n = je.at("n").get<int>();
        if (je.contains("k")) e.k = je.at("k").get<int>();
        e.value = je.at("value").get<std::string>();
        doc.entries.push_back(std::move(e));
    }
    return doc;
}

std::string to_csv(const TableDocument& doc, bool with_float) {
    const bool has_k = !doc.entries.empty() && doc.entries.front().k.has_value();
    std::ostringstream os;
    os << (has_k ? "n,k,value" : "n,value");
    if (with_float) os << ",value_float";
    os << "\n";
    for (const auto& e : doc.entries) {
        os << e.n;
        if (has_k) os << "," << *e.k;
        os << "," << e.value;
        if (with_float) os << "," << Rational::parse(e.value).to_double();
        os << "\n";
    }
    return os.str();
}

} // namespace probstirling
