#include "probstirling/table_io.hpp"

#include <doctest.h>

using namespace probstirling;

TEST_CASE("kind names round-trip") {
    for (const TableKind k : {TableKind::S2Y, TableKind::S1Y, TableKind::S2YL, TableKind::S1YL,
                              TableKind::Cumulants, TableKind::Euler, TableKind::AdellBenyi})
        CHECK(parse_table_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_table_kind("S3Y"), std::invalid_argument);
}

TEST_CASE("classical second-kind table for the constant one") {
    const TableDocument doc =
        build_table(parse_rv("constant:c=1"), TableKind::S2Y, Rational(0), 4);
    CHECK(doc.rv == "constant:c=1");
    CHECK(doc.order == 4);
    CHECK(!doc.lambda.has_value());
    CHECK(doc.entries.size() == 15); // full triangle
    for (const auto& e : doc.entries) {
        REQUIRE(e.k.has_value());
        CHECK(e.value == stirling2(e.n, *e.k).str());
    }
}

TEST_CASE("triangle documents carry exact strings") {
    const TableDocument doc =
        build_table(parse_rv("bernoulli:p=1/2"), TableKind::S2Y, Rational(0), 3);
    bool found = false;
    for (const auto& e : doc.entries)
        if (e.n == 3 && e.k == 2) {
            CHECK(e.value == "3/4");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("uniform first-kind tables are flagged generic-only") {
    const TableDocument doc =
        build_table(parse_rv("uniform:a=0,b=1"), TableKind::S1Y, Rational(0), 3);
    REQUIRE(doc.note.has_value());
    CHECK(*doc.note == "generic-only");
    const TableDocument plain =
        build_table(parse_rv("poisson:alpha=1"), TableKind::S1Y, Rational(0), 3);
    CHECK(!plain.note.has_value());
}

TEST_CASE("cumulant documents are sequences") {
    const TableDocument doc =
        build_table(parse_rv("poisson:alpha=1"), TableKind::Cumulants, Rational(0), 5);
    CHECK(doc.entries.size() == 5);
    for (const auto& e : doc.entries) {
        CHECK(!e.k.has_value());
        CHECK(e.value == "1");
    }
}

TEST_CASE("json round-trips the document") {
    for (const auto* rv : {"constant:c=1", "uniform:a=0,b=1"}) {
        for (const TableKind kind : {TableKind::S2Y, TableKind::S2YL, TableKind::Cumulants,
                                     TableKind::Euler, TableKind::AdellBenyi}) {
            const Rational lam = table_kind_is_degenerate(kind) ? Rational(1, 2) : Rational(0);
            const TableDocument doc = build_table(parse_rv(rv), kind, lam, 3);
            CHECK(from_json(to_json(doc)) == doc);
            CHECK(from_json(to_json(doc, true)) == doc); // float column is advisory
        }
    }
    const TableDocument with_note =
        build_table(parse_rv("uniform:a=0,b=1"), TableKind::S1YL, Rational(1, 2), 3);
    CHECK(from_json(to_json(with_note)) == with_note);
    CHECK_THROWS_AS(build_table(parse_rv("constant:c=1"), TableKind::S2Y, Rational(1, 2), 3),
                    std::invalid_argument);
}

TEST_CASE("csv and json carry identical values") {
    const TableDocument doc =
        build_table(parse_rv("geometric:p=1/3"), TableKind::S2Y, Rational(0), 3);
    const std::string csv = to_csv(doc);
    CHECK(csv.substr(0, 10) == "n,k,value\n");
    // every entry appears as its own CSV line
    for (const auto& e : doc.entries) {
        const std::string line =
            std::to_string(e.n) + "," + std::to_string(*e.k) + "," + e.value + "\n";
        CHECK(csv.find(line) != std::string::npos);
    }
    const std::string seq_csv =
        to_csv(build_table(parse_rv("geometric:p=1/3"), TableKind::Cumulants, Rational(0), 3));
    CHECK(seq_csv.substr(0, 8) == "n,value\n");
}
