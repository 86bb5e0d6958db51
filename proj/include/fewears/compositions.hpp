#ifndef FEWEARS_COMPOSITIONS_HPP
#define FEWEARS_COMPOSITIONS_HPP

// Integer compositions, their conjugation and reversal, and the correspondence
// between compositions of n-3 and 2-eared triangulations of the n-gon.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fewears/exact.hpp"
#include "fewears/triangulation.hpp"

namespace fewears {

/// An ordered list of positive parts.
class Composition {
public:
    /// Throws InputError if `parts` is empty or has a part < 1.
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& x, const Composition& y) { return x.parts_ <=> y.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// The gaps 1..m-1 between m unit balls that carry a bar. Sorted ascending.
struct BarSet {
    int m = 1;
    std::vector<int> bars;

    friend bool operator==(const BarSet&, const BarSet&) = default;
};

BarSet to_barset(const Composition& c);
/// Throws InputError if a bar lies outside 1..m-1 or repeats.
Composition from_barset(const BarSet& b);

/// Visits all 2^(m-1) compositions of m, ordered by the bar set read as a binary
/// counter (bit i-1 set <=> bar in gap i). Throws InputError for m < 1 or m > 63.
void for_each_composition(int m, const std::function<void(const Composition&)>& visit);
std::vector<Composition> enumerate_compositions(int m);

/// Bar-set complement within 1..m-1.
Composition conjugate(const Composition& c);
Composition reverse(const Composition& c);

/// Orbit under {id, reverse, conjugate, conjugate o reverse}, sorted, deduplicated.
std::vector<Composition> class_of(const Composition& c);

enum class ClassCountMethod { Closed, Burnside, Direct };
enum class FixedOp { Reversal, Conjugation, ConjRev };

/// Number of conjugation/reversal classes of compositions of m.
/// Closed throws DomainError for m < 2; Direct enumerates and is the oracle.
ExactCount count_classes(int m, ClassCountMethod method);

/// Number of compositions of m fixed by `op`, from the closed counts.
ExactCount count_fixed(int m, FixedOp op);
/// Same, by filtering all compositions of m.
ExactCount count_fixed_direct(int m, FixedOp op);

enum class Pointing { Up, Down };

/// Pointing directions of the n-4 middle triangles of a 2-eared triangulation.
struct PointingString {
    int n = 5;
    std::vector<Pointing> dirs;

    friend bool operator==(const PointingString&, const PointingString&) = default;
};

/// Reads the pointing string of a 2-eared triangulation. The reading is oriented
/// by taking the ear with the lexicographically smallest triple as the left ear
/// and walking the boundary from its tip towards increasing labels as the top
/// path. A middle triangle points UP when its boundary side is on the bottom path.
/// Throws DomainError unless t is 2-eared with n >= 5.
PointingString two_eared_to_string(const Triangulation& t);

/// Inverse of two_eared_to_string. The result has ears (n-1,0,1) and
/// (d+1,d+2,d+3) where d is the number of DOWN letters.
Triangulation string_to_two_eared(const PointingString& s);

/// Bars at the (1-based) positions of the UP letters; m = n-3.
Composition string_to_composition(const PointingString& s);
/// Throws InputError unless c.total() == n-3.
PointingString composition_to_string(const Composition& c, int n);

/// `2+5+1`
std::string format_composition(const Composition& c);
Composition parse_composition(std::string_view text);
/// `DUDDDDU`
std::string format_pointing(const PointingString& s);
/// n is inferred as length + 4; rejects letters other than U and D.
PointingString parse_pointing(std::string_view text);

}  // namespace fewears

#endif  // FEWEARS_COMPOSITIONS_HPP
