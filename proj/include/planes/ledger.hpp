/// @file ledger.hpp
/// @brief Registry of bounded numeric eliminations, each replayable as an
///        exact check with a verdict and witness data.
#pragma once

#include "planes/exactmath.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planes {

enum class Verdict { Eliminated, Violated, Inconclusive };

std::string_view to_string(Verdict v);

/// One parameter tuple and the values observed there.
struct Witness {
    std::string params;
    std::string values;

    bool operator==(const Witness&) const = default;
};

struct CaseResult {
    std::string id;
    Verdict verdict = Verdict::Eliminated;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    std::chrono::nanoseconds elapsed{0};

    /// Equality on everything except elapsed.
    bool same_outcome(const CaseResult& other) const;
};

/// Run options shared by every case. A bound below a case's own cap
/// shrinks the scanned window and turns an otherwise clean result into
/// Inconclusive, with the bound recorded in the notes.
struct CaseContext {
    unsigned jobs = 1;
    std::optional<BigInt> u_max;
    std::optional<BigInt> q_max;
};

struct CaseCheck {
    std::string id;
    std::string section;
    std::string anchor;
    std::string parameters;
    std::function<CaseResult(const CaseContext&)> check;
};

/// Every registered case, in canonical order.
const std::vector<CaseCheck>& registry();

/// nullptr when the id is not registered.
const CaseCheck* find_case(std::string_view id);

/// Throws std::out_of_range for an unknown id.
CaseResult replay(std::string_view id, const CaseContext& ctx = {});

/// Runs every case of `cases` (up to ctx.jobs at a time) and returns the
/// results in the order of `cases`.
std::vector<CaseResult> verify_all(const std::vector<CaseCheck>& cases, const CaseContext& ctx = {});
std::vector<CaseResult> verify_all(const CaseContext& ctx = {});

bool all_eliminated(const std::vector<CaseResult>& results);

// ---------------------------------------------------------------------------
// Helpers for case implementations

/// Accumulates witnesses and failures for one case.
class CaseBuilder {
public:
    explicit CaseBuilder(std::string id);

    /// Informative witness that does not affect the verdict.
    void witness(std::string params, std::string values);
    /// Records a failed expectation; the case becomes Violated.
    void violation(std::string params, std::string values);
    /// Records `ok` as an expectation; returns it.
    bool expect(bool ok, const std::string& params, const std::string& values);
    void note(std::string text);

    /// Clamps a cap to an override. Returns the effective bound and marks
    /// the result truncated when the override is tighter.
    BigInt bound(const char* name, const BigInt& cap, const std::optional<BigInt>& override_value);

    bool violated() const { return violated_; }
    CaseResult finish();

private:
    CaseResult result_;
    bool violated_ = false;
    bool truncated_ = false;
};

/// Prime powers q = p^e with 2 <= q <= cap and p <= 1024, ascending.
std::vector<BigInt> prime_powers_up_to(const BigInt& cap);

// Case groups; each returns checks in registry order.
std::vector<CaseCheck> frame_cases();
std::vector<CaseCheck> linear_cases();
std::vector<CaseCheck> classical_cases();
std::vector<CaseCheck> exceptional_cases();
std::vector<CaseCheck> global_cases();

}  // namespace planes
