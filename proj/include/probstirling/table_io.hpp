#pragma once

#include "probstirling/prob_stirling.hpp"
#include "probstirling/rv_models.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace probstirling {

enum class TableKind { S2Y, S1Y, S2YL, S1YL, Cumulants, Euler, AdellBenyi };

std::string to_string(TableKind kind);
TableKind parse_table_kind(std::string_view text);
bool table_kind_is_degenerate(TableKind kind);

struct TableEntry {
    int n = 0;
    std::optional<int> k;
    std::string value; // exact rational string, never floating point

    bool operator==(const TableEntry&) const = default;
};

// Machine-readable table of exact values; the JSON and CSV encodings carry
// identical numbers.
struct TableDocument {
    std::string rv;
    TableKind kind = TableKind::S2Y;
    std::optional<std::string> lambda; // degenerate kinds only
    int order = 0;
    std::optional<std::string> note; // e.g. "generic-only"
    std::vector<TableEntry> entries;

    bool operator==(const TableDocument&) const = default;
};

TableDocument build_table(const RVSpec& rv, TableKind kind, const Rational& lambda, int order);

// with_float adds a decimal column next to (never instead of) the exact value.
std::string to_json(const TableDocument& doc, bool with_float = false);
TableDocument from_json(const std::string& text);
std::string to_csv(const TableDocument& doc, bool with_float = false);

} // namespace probstirling
