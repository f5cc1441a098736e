#include "acatlab/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "acatlab/error.hpp"
#include "acatlab/sylow.hpp"

namespace acatlab {

std::string to_string(Sharpness s) {
    switch (s) {
        case Sharpness::Sharp: return "Sharp";
        case Sharpness::NotSharp: return "NotSharp";
        case Sharpness::Unknown: return "Unknown";
    }
    return "?";
}

std::pair<std::uint64_t, std::uint64_t> largest_prime_power(std::uint64_t n) {
    std::uint64_t q = 1, qp = 0;
    for (auto p : prime_factors(n)) {
        auto pp = prime_part(n, p).first;
        if (pp > q) {
            q = pp;
            qp = p;
        }
    }
    return {q, qp};
}

std::vector<PrimeData> prime_data(const FiniteGroup& g) {
    std::vector<PrimeData> out;
    for (auto p : prime_factors(g.order())) {
        PrimeData d;
        d.p = p;
        auto lattice = p_intersections(g, p);
        d.sylow_order = lattice.sylow_order;
        d.exponent = lattice.exponent;
        d.num_sylows = lattice.num_sylows;
        d.d_p = lattice.d_p;
        auto sylow = sylow_subgroup(g, p);
        d.normalizer_order = g.normalizer(sylow).size();
        d.self_normalizing = d.normalizer_order == sylow.size();
        out.push_back(d);
    }
    return out;
}

namespace {

long long lower_from(const std::vector<PrimeData>& data) {
    long long best = 0;
    for (const auto& d : data) {
        const auto ps = static_cast<long long>(d.sylow_order);
        best = std::max(best, d.self_normalizing ? ps - 1 : 2 * ps - 1);
        // an index-p subgroup of the Sylow is normal in it, so never self-normalizing
        if (d.exponent >= 1) best = std::max(best, 2 * (ps / static_cast<long long>(d.p)) - 1);
    }
    return best;
}

long long upper_from(std::size_t order) {
    if (order <= 1) return 0;
    const auto n = static_cast<long long>(order);
    if (is_prime_power(order)) return n - 1;
    const auto q = static_cast<long long>(largest_prime_power(order).first);
    return std::min(3 * q - 1, n - 1);
}

std::optional<std::uint64_t> special_from(std::size_t order) {
    if (order <= 1) return std::nullopt;
    const auto q = largest_prime_power(order).first;
    const auto r = order / q;
    std::optional<std::uint64_t> a;
    if (q > r) a = r;
    // only the largest prime power can witness it
    for (auto p : prime_factors(order)) {
        auto pp = prime_part(order, p).first;
        if (pp > order / pp && pp != q) fail(ErrorKind::Invariant, "two primes witness a-specialness");
    }
    return a;
}

Sharpness sharpness_from(std::size_t order) {
    if (order <= 1) return Sharpness::Sharp;
    auto a = special_from(order);
    if (a && (*a == 1 || *a == 2)) return Sharpness::Sharp;
    if (a && *a == 3) return Sharpness::Unknown;
    return Sharpness::NotSharp;
}

void require_not_prime_power(const FiniteGroup& g) {
    if (g.order() <= 1 || is_prime_power(g.order()))
        fail(ErrorKind::Hypothesis, "theorem hypothesis not met: group of prime power order");
}

bool range_from(const FiniteGroup& g, const std::vector<PrimeData>& data, long long lower, long long upper) {
    require_not_prime_power(g);
    const auto qp = largest_prime_power(g.order()).second;
    for (const auto& d : data) {
        if (d.p != qp) continue;
        const auto ps = static_cast<long long>(d.sylow_order);
        // min{2, |N(P)|/|P|} * |P| <= acat+1 <= 3|P|
        const long long lo = std::min<long long>(2 * ps, static_cast<long long>(d.normalizer_order));
        return lower + 1 >= lo && upper + 1 <= 3 * ps;
    }
    fail(ErrorKind::Invariant, "no prime data for the largest prime power");
}

}  // namespace

long long lower_bound(const FiniteGroup& g) { return g.order() <= 1 ? 0 : lower_from(prime_data(g)); }
long long upper_bound(const FiniteGroup& g) { return upper_from(g.order()); }
std::optional<std::uint64_t> a_special(const FiniteGroup& g) { return special_from(g.order()); }
Sharpness sharpness(const FiniteGroup& g) { return sharpness_from(g.order()); }

bool range_consistency(const FiniteGroup& g) {
    auto data = prime_data(g);
    return range_from(g, data, lower_from(data), upper_from(g.order()));
}

bool proof_inequality_check(const FiniteGroup& g) {
    require_not_prime_power(g);
    const auto q = largest_prime_power(g.order()).first;
    for (auto p : prime_factors(g.order())) {
        auto lattice = p_intersections(g, p);
        const unsigned s = lattice.exponent;
        for (unsigned d = 0; d < lattice.d_p; ++d) {
            // 1 + d/3 <= q / p^(s-d), cleared of denominators
            unsigned __int128 lhs = 3 + d, rhs = 3 * static_cast<unsigned __int128>(q);
            if (d <= s) {
                for (unsigned i = 0; i < s - d; ++i) lhs *= p;
            } else {
                for (unsigned i = 0; i < d - s; ++i) rhs *= p;
            }
            if (lhs > rhs) return false;
        }
        for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
            const long long d = static_cast<long long>(lattice.depth[i]) - 1;
            const long long room = static_cast<long long>(3 * q / lattice.nodes[i].size()) - 2;
            if (room < d + 1) return false;
        }
    }
    return true;
}

AcatReport analyze(const FiniteGroup& g) {
    AcatReport r;
    r.group_id = g.name().empty() ? "order" + std::to_string(g.order()) : g.name();
    r.order = g.order();
    r.per_prime = prime_data(g);
    std::tie(r.q, r.q_prime) = largest_prime_power(g.order());
    r.lower = g.order() <= 1 ? 0 : lower_from(r.per_prime);
    r.upper = upper_from(g.order());
    r.a_special = special_from(g.order());
    r.sharpness = sharpness_from(g.order());
    if (r.lower > r.upper) fail(ErrorKind::Invariant, "lower bound exceeds upper bound for " + r.group_id);
    if (r.lower == r.upper) {
        r.exact = r.lower;
        if (*r.exact != static_cast<long long>(r.order) - 1)
            fail(ErrorKind::Invariant, "bounds meet below |G|-1 for " + r.group_id);
    }
    const auto n1 = static_cast<long long>(r.order) - 1;
    if (r.sharpness == Sharpness::Sharp && (r.lower != n1 || r.upper != n1))
        fail(ErrorKind::Invariant, "sharp group without matching bounds: " + r.group_id);
    if (r.sharpness == Sharpness::NotSharp && r.upper >= n1)
        fail(ErrorKind::Invariant, "non-sharp group without a better upper bound: " + r.group_id);
    if (r.order > 1 && !is_prime_power(r.order)) {
        r.range_consistent = range_from(g, r.per_prime, r.lower, r.upper);
        r.proof_inequality = proof_inequality_check(g);
    }
    return r;
}

namespace {

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const AcatReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["group_id"] = r.group_id;
    j["order"] = r.order;
    auto& primes = j["per_prime"] = nlohmann::json::array();
    for (const auto& d : r.per_prime)
        primes.push_back({{"p", d.p},
                          {"sylow_order", d.sylow_order},
                          {"num_sylows", d.num_sylows},
                          {"normalizer_order", d.normalizer_order},
                          {"self_normalizing", d.self_normalizing},
                          {"d_p", d.d_p}});
    j["q"] = r.q;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["exact"] = opt(r.exact);
    j["a_special"] = opt(r.a_special);
    j["sharpness"] = to_string(r.sharpness);
    j["range_consistency"] = opt(r.range_consistent);
    j["proof_inequality_check"] = opt(r.proof_inequality);
    if (r.certify_requested) {
        j["certificate_n"] = opt(r.certificate_n);
        if (!r.certificate_note.empty()) j["certificate_note"] = r.certificate_note;
    }
    return j;
}

std::string to_text(const AcatReport& r) {
    std::ostringstream out;
    auto yes = [](const std::optional<bool>& b) { return b ? (*b ? "pass" : "FAIL") : "n/a (prime power order)"; };
    out << "group " << r.group_id << "  |G| = " << r.order << "\n";
    for (const auto& d : r.per_prime)
        out << "  p=" << d.p << "  |P|=" << d.sylow_order << "  n_p=" << d.num_sylows << "  |N(P)|=" << d.normalizer_order
            << (d.self_normalizing ? "  self-normalizing" : "") << "  d_p=" << d.d_p << "\n";
    out << "  q = " << r.q << "\n";
    out << "  bounds: " << r.lower << " <= acat <= " << r.upper << "\n";
    out << "  exact: " << (r.exact ? std::to_string(*r.exact) : "-") << "\n";
    out << "  a-special: " << (r.a_special ? std::to_string(*r.a_special) : "-") << "\n";
    out << "  sharpness: " << to_string(r.sharpness) << "\n";
    out << "  range consistency: " << yes(r.range_consistent) << "\n";
    out << "  proof inequality: " << yes(r.proof_inequality) << "\n";
    if (r.certify_requested) {
        out << "  certificate: " << (r.certificate_n ? "acat <= " + std::to_string(*r.certificate_n) : "none");
        if (!r.certificate_note.empty()) out << " (" << r.certificate_note << ")";
        out << "\n";
    }
    return out.str();
}

std::string tsv_header() { return "group\torder\tq\ta_special\tlower\tupper\tsharpness\td_p"; }

std::string to_tsv_row(const AcatReport& r) {
    std::ostringstream out;
    out << r.group_id << '\t' << r.order << '\t' << r.q << '\t' << (r.a_special ? std::to_string(*r.a_special) : "-")
        << '\t' << r.lower << '\t' << r.upper << '\t' << to_string(r.sharpness) << '\t';
    for (std::size_t i = 0; i < r.per_prime.size(); ++i)
        out << (i ? "," : "") << r.per_prime[i].p << ':' << r.per_prime[i].d_p;
    return out.str();
}

}  // namespace acatlab
