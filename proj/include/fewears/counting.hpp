#ifndef FEWEARS_COUNTING_HPP
#define FEWEARS_COUNTING_HPP

// Closed-form counts and their brute-force counterparts. Formulas with
// fractional prefactors are evaluated over exact rationals and must come out
// integral; anything else throws InvariantError.

#include <map>
#include <optional>

#include "fewears/exact.hpp"
#include "fewears/parallel.hpp"

namespace fewears {

/// C_k from a thread-safe memo table filled by Segner's recurrence.
ExactCount catalan(int k);

/// S(n,k) = sum_{i=0..k} C_i C_{n-4-i}, for -1 <= k <= n-4. S(n,-1) = 0 and
/// S(n,n-4) = C_{n-3}.
ExactCount catalan_partial_convolution(int n, int k);

/// Triangulations of the n-gon with exactly k ears:
/// (n/k) 2^(n-2k) binom(n-4, 2k-4) C_{k-2}. Requires n >= 4, k >= 2.
ExactCount hurtado_noy(int n, int k);

enum class CensusMethod { Formula, Brute };

/// Number of triangulations of the n-gon per ear count k, 2 <= k <= n/2.
struct EarCensus {
    int n = 4;
    std::map<int, ExactCount> counts;

    ExactCount total() const;
    friend bool operator==(const EarCensus&, const EarCensus&) = default;
};

/// Brute force enumerates every triangulation (feasible to n ~ 15).
EarCensus ear_census(int n, CensusMethod method, int threads = default_thread_count());

/// 2^(n-6) + 2^(floor(n/2)-3) classes of 2-eared triangulations under the
/// dihedral group. Throws DomainError for n < 5 (the closed form gives 3/4 at n=4).
ExactCount symmetry_classes_2ear(int n);

/// (1/3) 2^(n-8) (n-4)(n-5) + [2|n] 2^(n/2-4) + [3|n] (1/3) 2^(n/3-2).
/// Throws DomainError for n < 6.
ExactCount symmetry_classes_3ear(int n);

/// Number of dihedral orbits among the triangulations with `ears` ears (all
/// triangulations when empty), by counting canonical forms. Requires n >= 4.
ExactCount symmetry_classes_orbit(int n, std::optional<int> ears, int threads = default_thread_count());

/// Orbit counts for every ear count at once; key 0 holds the total.
std::map<int, ExactCount> symmetry_orbit_census(int n, int threads = default_thread_count());

}  // namespace fewears

#endif  // FEWEARS_COUNTING_HPP
