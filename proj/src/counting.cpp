#include "fewears/counting.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "fewears/errors.hpp"
#include "fewears/triangulation.hpp"

namespace fewears {

namespace {

std::mutex catalan_mutex;
std::vector<ExactCount> catalan_table{1};

// Brute-force work is split by the apex of the triangle over side 0-1 and the
// partial results are merged in apex order.
template <class Acc, class Visit>
std::vector<Acc> per_apex(int n, int threads, Visit visit) {
    const std::size_t parts = n >= 4 ? static_cast<std::size_t>(n - 2) : 1;
    return parallel_map(parts, threads, [&](std::size_t i) {
        Acc acc{};
        for_each_triangulation_with_apex(n, static_cast<int>(i) + 2,
                                         [&](const Triangulation& t) { visit(acc, t); });
        return acc;
    });
}

}  // namespace

ExactCount catalan(int k) {
    if (k < 0) throw InputError("catalan index must be >= 0, got " + std::to_string(k));
    std::lock_guard lock(catalan_mutex);
    while (static_cast<int>(catalan_table.size()) <= k) {
        const int next = static_cast<int>(catalan_table.size());
        ExactCount c = 0;
        for (int i = 0; i < next; ++i) c += catalan_table[i] * catalan_table[next - 1 - i];
        catalan_table.push_back(c);
    }
    return catalan_table[k];
}

ExactCount catalan_partial_convolution(int n, int k) {
    if (k < -1) throw InputError("partial convolution needs k >= -1, got " + std::to_string(k));
    if (k > n - 4) {
        throw InputError("partial convolution needs k <= n-4 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
    ExactCount s = 0;
    for (int i = 0; i <= k; ++i) s += catalan(i) * catalan(n - 4 - i);
    return s;
}

ExactCount hurtado_noy(int n, int k) {
    if (n < 4) throw InputError("ear counts need n >= 4, got " + std::to_string(n));
    if (k < 2) throw InputError("ear counts need k >= 2, got " + std::to_string(k));
    if (2 * k - 4 > n - 4) return 0;
    const Rational value = Rational(n, k) * pow2(n - 2 * k) * Rational(binomial(n - 4, 2 * k - 4)) *
                           Rational(catalan(k - 2));
    return require_integral(value, "ear-count formula at n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

ExactCount EarCensus::total() const {
    ExactCount sum = 0;
    for (const auto& [k, c] : counts) sum += c;
    return sum;
}

EarCensus ear_census(int n, CensusMethod method, int threads) {
    if (n < 4) throw InputError("ear census needs n >= 4, got " + std::to_string(n));
    EarCensus census{n, {}};
    for (int k = 2; k <= n / 2; ++k) census.counts[k] = 0;
    if (method == CensusMethod::Formula) {
        for (int k = 2; k <= n / 2; ++k) census.counts[k] = hurtado_noy(n, k);
        return census;
    }
    using Tally = std::vector<long long>;
    auto parts = per_apex<Tally>(n, threads, [n](Tally& tally, const Triangulation& t) {
        if (tally.empty()) tally.assign(n + 1, 0);
        ++tally[ear_count(t)];
    });
    for (const Tally& tally : parts) {
        for (std::size_t k = 0; k < tally.size(); ++k) {
            if (tally[k] == 0) continue;
            if (k < 2 || static_cast<int>(k) > n / 2) {
                throw InvariantError("triangulation of the " + std::to_string(n) + "-gon with " + std::to_string(k) + " ears");
            }
            census.counts[static_cast<int>(k)] += tally[k];
        }
    }
    return census;
}

ExactCount symmetry_classes_2ear(int n) {
    if (n < 5) {
        throw DomainError("2-eared class formula holds for n >= 5 only (it gives 3/4 at n=4); got n=" + std::to_string(n));
    }
    return require_integral(pow2(n - 6) + pow2(n / 2 - 3), "2-eared class formula at n=" + std::to_string(n));
}

ExactCount symmetry_classes_3ear(int n) {
    if (n < 6) throw DomainError("3-eared class formula needs n >= 6, got n=" + std::to_string(n));
    Rational value = Rational(1, 3) * pow2(n - 8) * Rational((n - 4) * (n - 5));
    if (n % 2 == 0) value += pow2(n / 2 - 4);
    if (n % 3 == 0) value += Rational(1, 3) * pow2(n / 3 - 2);
    return require_integral(value, "3-eared class formula at n=" + std::to_string(n));
}

std::map<int, ExactCount> symmetry_orbit_census(int n, int threads) {
    if (n < 4) throw InputError("symmetry classes need n >= 4, got " + std::to_string(n));
    using Tally = std::vector<long long>;
    auto parts = per_apex<Tally>(n, threads, [n](Tally& tally, const Triangulation& t) {
        if (tally.empty()) tally.assign(n + 1, 0);
        if (canonical_form(t) == t) ++tally[ear_count(t)];
    });
    std::map<int, ExactCount> out;
    out[0] = 0;
    for (const Tally& tally : parts) {
        for (std::size_t k = 0; k < tally.size(); ++k) {
            if (tally[k] == 0) continue;
            out[static_cast<int>(k)] += tally[k];
            out[0] += tally[k];
        }
    }
    return out;
}

ExactCount symmetry_classes_orbit(int n, std::optional<int> ears, int threads) {
    if (ears && *ears < 2) return 0;
    const auto census = symmetry_orbit_census(n, threads);
    const auto it = census.find(ears.value_or(0));
    return it == census.end() ? ExactCount(0) : it->second;
}

}  // namespace fewears
