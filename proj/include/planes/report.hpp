/// @file report.hpp
/// @brief Text and line-delimited structured records for case results,
///        sieve rows and the involution catalog.
#pragma once

#include "planes/groups.hpp"
#include "planes/ledger.hpp"
#include "planes/scan.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace planes {

enum class OutputFormat { Text, Structured };

/// Witnesses carried by one case record.
inline constexpr std::size_t kReportWitnessLimit = 10;

/// One line of JSON: id, section, anchor, verdict, witness_count,
/// witnesses (at most kReportWitnessLimit), notes, elapsed_ms.
std::string case_record(const CaseResult& result, OutputFormat format);

/// Trailing record with aggregate verdict counts.
std::string case_summary(const std::vector<CaseResult>& results, OutputFormat format);

std::string row_record(const SieveRow& row, OutputFormat format);
std::string row_summary(std::size_t rows, std::size_t survivors, OutputFormat format);

/// One record per catalog entry: family, label, formula, anchor, exact flag.
std::string catalog_record(const CatalogEntry& entry, OutputFormat format);

/// Exact integer with its factorization, for order/index/factor. An empty
/// `what` prints the bare value.
std::string integer_record(const std::string& what, const BigInt& value, OutputFormat format);

}  // namespace planes
