// One line per acceptance criterion. Known deviations are reported as FAIL
// and listed in kKnownDeviations; any other failure makes the run fail.
#include "oracles.hpp"
#include "planes/groups.hpp"
#include "planes/ledger.hpp"
#include "planes/plane.hpp"
#include "planes/report.hpp"
#include "planes/scan.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdio>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <thread>

using namespace planes;

namespace {

struct Line {
    bool pass = false;
    std::string detail;
};

constexpr int kKnownDeviations[] = {8};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
    return out;
}

Line full_replay() {
    CaseContext ctx;
    ctx.jobs = std::max(1u, std::thread::hardware_concurrency());
    const auto start = std::chrono::steady_clock::now();
    const auto results = verify_all(ctx);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::vector<std::string> bad;
    for (const auto& r : results)
        if (r.verdict != Verdict::Eliminated) bad.push_back(r.id);
    std::ostringstream os;
    os << results.size() << " cases, " << results.size() - bad.size() << " Eliminated, " << secs << " s";
    if (!bad.empty()) os << "; not eliminated: " << join(bad);
    return {results.size() >= 26 && bad.empty() && secs < 600, os.str()};
}

Line prime_power_values() {
    std::vector<std::string> powers;
    std::uint64_t primes = 0;
    for_each_quadratic(1, kScanUMax, [&](std::uint64_t w, std::uint64_t, const WordFactors& f) {
        if (f.size() == 1 && f[0].second == 1) ++primes;
        if (f.size() == 1 && f[0].second > 1)
            powers.push_back("u=" + std::to_string(w) + ":" + std::to_string(f[0].first) + "^" + std::to_string(f[0].second));
    });
    const bool replay_ok = replay("LJUNGGREN-SCAN").verdict == Verdict::Eliminated;
    return {powers == std::vector<std::string>{"u=18:7^3"} && replay_ok,
            "1 <= u <= 10^6: " + std::to_string(primes) + " prime values, prime powers {" + join(powers) + "}"};
}

Line alternating_cutoff() {
    int last_hold = 0;
    bool ok = true;
    for (int n = 5; n <= 200; ++n) {
        const bool holds = ipow(2, n / 2) < ipow(n, 4);
        ok &= holds == (n <= 43);
        if (holds) last_hold = n;
    }
    ok &= replay("ALT-BOUND").verdict == Verdict::Eliminated;
    return {ok && last_hold == 43, "2^floor(n/2) < n^4 on 5..200 exactly for n <= " + std::to_string(last_hold)};
}

Line psl2_tuple() {
    const auto classes = classes_for(GroupSpec::linear(2, 13));
    if (classes.size() != 1) return {false, "unexpected catalog classes for PSL(2,13)"};
    const BigInt n_g = involution_class_size(classes[0]);
    const auto c = involution_counts(n_g, 7);
    if (!c) return {false, "no tuple for r_g = 7"};
    std::ostringstream os;
    os << "(n_g, r_g, ratio, d_g, v) = (" << c->n_g << ", " << c->r_g << ", " << c->ratio << ", " << c->d_g << ", "
       << c->v() << ")";
    const bool ok = c->n_g == 91 && c->r_g == 7 && c->ratio == 13 && c->d_g == 21 && c->v() == 273 &&
                    replay("PSL2-Q13").verdict == Verdict::Eliminated;
    return {ok, os.str()};
}

Line e6_sandwich() {
    using boost::multiprecision::cpp_rational;
    static const long coeff[] = {32768, 16384, 12288, 10240, 25344, 16256, 13536, 11984, 39587};
    const auto N = [](const BigInt& q) {
        return (ipow(q, 8) + ipow(q, 4) + 1) * (ipow(q, 6) + ipow(q, 3) + 1) * (q * q + q + 1);
    };
    const auto form = [](const cpp_rational& u) { return u * u - u + 1; };
    bool upper = true, lower = true, small = true;
    std::vector<std::string> even;
    for (BigInt q = 2; q <= 1024; ++q) {
        BigInt acc = 0;
        for (long c : coeff) acc = acc * q + c;
        const cpp_rational u(acc, 32768);
        const cpp_rational u1 = u - cpp_rational(1, 32768);
        const BigInt n = N(q);
        lower &= form(u1) < n;
        const bool prime_power = is_prime_power(q).has_value();
        if (prime_power && q >= 47) upper &= form(u) > n;
        if (prime_power && q < 47) {
            const BigInt disc = 4 * n - 3, r = isqrt(disc);
            const bool representable = r * r == disc;
            if (q % 2 == 1) small &= !representable;
            else if (representable) even.push_back("q=" + q.str() + " (u=" + BigInt((r + 1) / 2).str() + ")");
        }
    }
    std::string detail = std::string("upper ") + (upper ? "holds" : "fails") + ", lower " + (lower ? "holds" : "fails") +
                         ", odd q < 47 " + (small ? "not representable" : "representable");
    if (!even.empty()) detail += "; even q < 47 representable: " + join(even) + ", left to the even-q cases";
    return {upper && lower && small && replay("E6-SANDWICH").verdict == Verdict::Eliminated, detail};
}

Line prime_divisor_structure() {
    for (int u = 2; u <= 10000; ++u) {
        const BigInt plus = BigInt(u) * u + u + 1, minus = BigInt(u) * u - u + 1;
        if (boost::multiprecision::gcd(plus, minus) != 1) return {false, "gcd > 1 at u=" + std::to_string(u)};
        for (const BigInt& w : {plus, minus})
            for (const auto& pf : factorize(w).factors)
                if (pf.prime != 3 && pf.prime % 3 != 1)
                    return {false, "prime " + pf.prime.str() + " at u=" + std::to_string(u)};
    }
    return {true, "2 <= u <= 10^4: coprime, every prime divisor is 3 or 1 mod 3"};
}

Line small_oracles() {
    std::vector<std::string> bad;
    if (gaussian_binomial(4, 2, 2) != oracle::count_subspaces_gf2(4, 2)) bad.push_back("[4,2]_2");
    const oracle::SmallField f4(2, 2, 1, 1), f5(5, 1), f7(7, 1), f9(3, 2, 2, 0);
    for (const auto& [F, q] : std::vector<std::pair<const oracle::SmallField*, int>>{{&f4, 4}, {&f5, 5}, {&f7, 7}, {&f9, 9}})
        if (oracle::enumerate_psl(*F, 2).psl_order != order(GroupSpec::linear(2, q)))
            bad.push_back("PSL(2," + std::to_string(q) + ")");
    const oracle::A7Census a7 = oracle::census_a7();
    if (a7.n_g != 105 || a7.r_s5 != 25 || a7.r_a6 != 45 || replay("ALT-A7").verdict != Verdict::Eliminated)
        bad.push_back("A7");
    return {bad.empty(), bad.empty() ? "[4,2]_2 = 35, |PSL(2,q)| for q in {4,5,7,9}, A7 counts 105/25/45 agree"
                                     : "mismatch: " + join(bad)};
}

Line unitary_parabolic() {
    std::vector<std::string> passes, mod_misses;
    bool forward = true;
    for (unsigned a = 1; a <= 9; a += 2) {
        const BigInt q = ipow(2, a);
        for (unsigned n = 3; n <= 50; ++n) {
            if (n == 3 && a == 1) continue;
            const bool pass = admissible_index(parabolic_index(GroupSpec::unitary(n, q), 1));
            const std::string at = "(" + q.str() + "," + std::to_string(n) + ")";
            if (pass) passes.push_back(at);
            if (pass && n % 12 != 2) forward = false;
            if (!pass && n % 12 == 2) mod_misses.push_back(at);
        }
    }
    const bool exact = forward && mod_misses.empty();
    std::string detail = "passes {" + join(passes) + "}; ";
    detail += forward ? "every pass has n = 2 mod 12" : "a pass has n != 2 mod 12";
    if (!mod_misses.empty()) detail += "; " + std::to_string(mod_misses.size()) + " pairs with n = 2 mod 12 fail, e.g. " + mod_misses.front();
    return {exact, detail};
}

Line determinism() {
    static const std::regex elapsed("\"elapsed_ms\":[0-9.eE+-]+");
    const auto render = [](unsigned jobs) {
        CaseContext ctx;
        ctx.jobs = jobs;
        const auto results = verify_all(ctx);
        std::string out;
        for (const auto& r : results) out += case_record(r, OutputFormat::Structured) + "\n";
        out += case_summary(results, OutputFormat::Structured) + "\n";
        return std::regex_replace(out, elapsed, "\"elapsed_ms\":_");
    };
    const std::string a = render(1), b = render(1), c = render(4);
    return {a == b && a == c, "structured reports at jobs=1, 1, 4 identical apart from elapsed_ms"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Line (*)()>> criteria{
        {"verify-all", full_replay},
        {"LJUNGGREN-SCAN", prime_power_values},
        {"ALT-BOUND", alternating_cutoff},
        {"PSL2-Q13", psl2_tuple},
        {"E6-SANDWICH", e6_sandwich},
        {"prime divisors", prime_divisor_structure},
        {"oracles", small_oracles},
        {"U-PARAB-MOD", unitary_parabolic},
        {"determinism", determinism},
    };
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        const Line line = criteria[i].second();
        const bool known = std::find(std::begin(kKnownDeviations), std::end(kKnownDeviations), id) != std::end(kKnownDeviations);
        std::printf("[%s] %d %s: %s%s\n", line.pass ? "PASS" : "FAIL", id, criteria[i].first, line.detail.c_str(),
                    !line.pass && known ? " (known deviation)" : "");
        if (!line.pass && !known) ++unexpected;
        if (line.pass && known) std::printf("note: criterion %d now passes; drop it from the deviation list\n", id);
    }
    return unexpected == 0 ? 0 : 1;
}
