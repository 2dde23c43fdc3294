#include "planes/report.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

using namespace planes;
using nlohmann::json;

TEST(CaseRecord, StructuredFields) {
    const CaseResult r = replay("SPORADIC");
    ASSERT_GT(r.witnesses.size(), kReportWitnessLimit);
    const json j = json::parse(case_record(r, OutputFormat::Structured));
    EXPECT_EQ(j.at("record"), "case");
    EXPECT_EQ(j.at("id"), "SPORADIC");
    EXPECT_EQ(j.at("section"), find_case("SPORADIC")->section);
    EXPECT_EQ(j.at("anchor"), find_case("SPORADIC")->anchor);
    EXPECT_EQ(j.at("verdict"), "Eliminated");
    EXPECT_EQ(j.at("witness_count"), r.witnesses.size());
    EXPECT_EQ(j.at("witnesses").size(), kReportWitnessLimit);
    EXPECT_TRUE(j.at("elapsed_ms").is_number());
    EXPECT_TRUE(j.at("notes").is_array());
}

TEST(CaseRecord, SingleLine) {
    for (const auto& r : verify_all()) {
        const std::string line = case_record(r, OutputFormat::Structured);
        EXPECT_EQ(line.find('\n'), std::string::npos) << r.id;
    }
}

TEST(CaseRecord, TextMentionsVerdictAndId) {
    const std::string text = case_record(replay("ALT-BOUND"), OutputFormat::Text);
    EXPECT_EQ(text.rfind("ELIMINATED  ALT-BOUND", 0), 0u);
    EXPECT_NE(text.find("n=44"), std::string::npos);
}

TEST(Summary, Counts) {
    std::vector<CaseResult> results(3);
    results[1].verdict = Verdict::Violated;
    results[2].verdict = Verdict::Inconclusive;
    const json j = json::parse(case_summary(results, OutputFormat::Structured));
    EXPECT_EQ(j.at("record"), "summary");
    EXPECT_EQ(j.at("cases"), 3);
    EXPECT_EQ(j.at("eliminated"), 1);
    EXPECT_EQ(j.at("violated"), 1);
    EXPECT_EQ(j.at("inconclusive"), 1);
    EXPECT_EQ(j.at("all_eliminated"), false);
}

TEST(RowRecord, Structured) {
    const auto rows = sieve_orders(4, 4, {GroupSpec::linear(2, 13)});
    const json j = json::parse(row_record(rows.at(0), OutputFormat::Structured));
    EXPECT_EQ(j.at("u"), "4");
    EXPECT_EQ(j.at("v"), "273");
    EXPECT_EQ(j.at("v_factors"), "3*7*13");
    EXPECT_EQ(j.at("survived"), true);
    EXPECT_EQ(j.at("filters").size(), 5u);
}

TEST(CatalogRecord, Structured) {
    for (const auto& e : involution_catalog()) {
        const json j = json::parse(catalog_record(e, OutputFormat::Structured));
        EXPECT_EQ(j.at("label"), e.label);
        EXPECT_EQ(j.at("exact"), e.exact);
        EXPECT_EQ(j.at("anchor"), e.anchor);
        EXPECT_FALSE(j.at("formula").get<std::string>().empty());
    }
}

TEST(IntegerRecord, Text) {
    EXPECT_EQ(integer_record("", 273, OutputFormat::Text), "273 = 3*7*13");
    EXPECT_EQ(integer_record("|PSL(2,13)|", 1092, OutputFormat::Text), "|PSL(2,13)| = 1092 = 2^2*3*7*13");
}
