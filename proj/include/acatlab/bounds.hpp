#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "acatlab/caps.hpp"
#include "acatlab/group.hpp"

namespace acatlab {

enum class Sharpness { Sharp, NotSharp, Unknown };
std::string to_string(Sharpness s);

struct PrimeData {
    std::uint64_t p = 0;
    std::uint64_t sylow_order = 1;
    unsigned exponent = 0;
    std::size_t num_sylows = 0;
    std::size_t normalizer_order = 0;
    bool self_normalizing = false;
    unsigned d_p = 0;
};

struct AcatReport {
    std::string group_id;
    std::size_t order = 0;
    std::vector<PrimeData> per_prime;
    std::uint64_t q = 1;                     // largest prime-power divisor
    std::uint64_t q_prime = 0;               // its prime
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> exact;
    std::optional<std::uint64_t> a_special;
    Sharpness sharpness = Sharpness::Sharp;
    std::optional<bool> range_consistent;    // absent for prime-power order
    std::optional<bool> proof_inequality;
    bool certify_requested = false;
    std::optional<long long> certificate_n;
    std::string certificate_note;
};

/// (q, p) with q the largest prime-power divisor of n and p its prime.
std::pair<std::uint64_t, std::uint64_t> largest_prime_power(std::uint64_t n);

std::vector<PrimeData> prime_data(const FiniteGroup& g);

long long lower_bound(const FiniteGroup& g);
long long upper_bound(const FiniteGroup& g);
std::optional<std::uint64_t> a_special(const FiniteGroup& g);
Sharpness sharpness(const FiniteGroup& g);
/// Both throw ErrorKind::Hypothesis for groups of prime-power order.
bool range_consistency(const FiniteGroup& g);
bool proof_inequality_check(const FiniteGroup& g);

AcatReport analyze(const FiniteGroup& g);

nlohmann::json to_json(const AcatReport& r);
std::string to_text(const AcatReport& r);
std::string tsv_header();
std::string to_tsv_row(const AcatReport& r);

}  // namespace acatlab
