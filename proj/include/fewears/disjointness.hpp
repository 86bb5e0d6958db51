#ifndef FEWEARS_DISJOINTNESS_HPP
#define FEWEARS_DISJOINTNESS_HPP

// Triangulations that share no diagonal with a given one: named constructors,
// the brute-force avoid-counter, and the closed forms for 2- and 3-eared
// triangulations together with the identities that tie them together.

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fewears/exact.hpp"
#include "fewears/parallel.hpp"
#include "fewears/triangulation.hpp"

namespace fewears {

/// Branch lengths (triangle counts) of a 3-eared triangulation's dual tree.
/// Constructors accept the branches in any order and keep that order; equality
/// of types is as multisets (see same_type).
struct EarType {
    int p = 1;
    int q = 1;
    int r = 1;

    int total() const { return p + q + r; }
    /// The same multiset, sorted descending.
    EarType sorted() const;

    friend bool operator==(const EarType&, const EarType&) = default;
};

bool same_type(const EarType& x, const EarType& y);
std::string format_ear_type(const EarType& t);
/// `p,q,r`
EarType parse_ear_type(std::string_view text);

/// Fan at vertex 1: diagonals 1-3, 1-4, ..., 1-(n-1). Requires n >= 4.
Triangulation arrow(int n);

/// Zig-zag 0-2, 2-(n-1), (n-1)-3, 3-(n-2), ... with n-3 diagonals. Requires n >= 4.
Triangulation snake(int n);

/// Representative of type (p,q,r): internal triangle {0, p+1, p+q+2} with a fan
/// on each branch. Requires p, q, r >= 1 and p+q+r = n-3.
Triangulation three_ear_rep(int n, const EarType& t);

/// Branch lengths around the unique internal triangle, sorted descending.
/// Throws DomainError unless t has exactly 3 ears.
EarType three_ear_type(const Triangulation& t);

/// Number of triangulations of the n-gon that use none of `forbidden`. Counted
/// by recursing on the apex over each base chord, memoized per sub-polygon.
ExactCount count_avoiding(int n, std::span<const Diagonal> forbidden);

/// count_avoiding with the diagonals of t.
ExactCount disj_count(const Triangulation& t);

/// Independent oracle: enumerates every triangulation and tests are_disjoint.
ExactCount disj_count_by_enumeration(const Triangulation& t);

/// C_{n-3}: the count for any 2-eared triangulation. Requires n >= 4.
ExactCount disj_2ear_formula(int n);

/// Signed sum over compositions (a_1..a_i) of n-2 of (-1)^(i+1) C_{a_1}...C_{a_i}.
ExactCount disj_inclusion_exclusion(int n);

/// Coefficients 0..order of sum_{i>=0} (-1)^i x^i s(x)^(i+1), with
/// s(x) = (c(x)-1)/x and c(x) the Catalan series, truncated mod x^(order+1).
std::vector<ExactCount> disj_series_coefficients(int order);

/// sum_{i=0}^{n-3-m} C_i C_{n-3-i}: triangulations avoiding a(a+2), ..., a(a+m+1).
ExactCount m_forb_formula(int n, int m);

/// The m diagonals a(a+2), ..., a(a+m+1), labels mod n.
std::vector<Diagonal> m_forb_diagonals(int n, int m, int apex);

/// Sum of the two case counts for a 3-eared triangulation of type t: those
/// containing 1-(n-1) plus those that do not.
ExactCount disj_3ear_cases(int n, const EarType& t);

/// 2 C_{n-3} - S(p-1) - S(q-1) - S(r-1) with S = catalan_partial_convolution.
/// Accepts zero branches, so (p, n-3-p, 0) reproduces the 2-eared count.
ExactCount disj_3ear_shifted(int n, const EarType& t);

/// 2 C_{n-3} - S(p) - S(q) - S(r), the summation limits exactly as printed in
/// the source formula. Disagrees with brute force (n=6, (1,1,1): 1 vs 4); kept
/// only so the verifier can report the discrepancy.
ExactCount disj_3ear_printed(int n, const EarType& t);

/// (a + b) mod n; equal residues mean parallel chords of the regular n-gon.
/// Accepts sides as well as diagonals.
int parallel_residue(int n, int a, int b);

/// Triangulations avoiding every diagonal whose parallel residue is in `residues`.
ExactCount count_avoiding_parallel(int n, const std::set<int>& residues);

/// Diagonals of the n-gon with residue in `residues`, ascending.
std::vector<Diagonal> parallel_class_diagonals(int n, const std::set<int>& residues);

/// Internal triangles of a triangulation, compared as an unordered set.
struct InternalSignature {
    std::vector<Triangle> triangles;

    friend auto operator<=>(const InternalSignature&, const InternalSignature&) = default;
};

InternalSignature internal_signature(const Triangulation& t);
std::string format_signature(const InternalSignature& s);

struct SignatureGroup {
    InternalSignature signature;
    std::size_t size = 0;
    ExactCount disj = 0;
};

struct SignatureReport {
    int n = 4;
    std::vector<SignatureGroup> groups;
    /// Set when two triangulations with equal signatures have different counts.
    std::optional<std::pair<Triangulation, Triangulation>> counterexample;
    /// Set when the pairwise count and count_avoiding disagree for some triangulation.
    std::optional<Triangulation> oracle_mismatch;

    bool ok() const { return !counterexample && !oracle_mismatch; }
};

/// Groups all triangulations of the n-gon by internal signature and checks that
/// the number of disjoint triangulations, computed over all pairs, is constant on
/// every group. Requires 4 <= n <= 11.
SignatureReport signature_invariance_check(int n, int threads = default_thread_count());

/// Ordered pairs (T1, T2) of disjoint triangulations of the n-gon, summed from
/// per-triangulation avoid counts. No closed form is claimed.
ExactCount total_disjoint_pairs(int n, int threads = default_thread_count());

}  // namespace fewears

#endif  // FEWEARS_DISJOINTNESS_HPP
