#ifndef FEWEARS_TRIANGULATION_HPP
#define FEWEARS_TRIANGULATION_HPP

// Triangulations of a labeled convex n-gon. Vertices are 0..n-1 counterclockwise
// and every predicate here is purely combinatorial: no coordinates are involved.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fewears {

/// A chord a-b of the polygon, normalized so that a < b.
struct Diagonal {
    int a = 0;
    int b = 0;

    friend constexpr auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// True if a-b (in either order) is a side of the n-gon.
constexpr bool is_side(int n, int a, int b) {
    const int lo = a < b ? a : b;
    const int hi = a < b ? b : a;
    return hi - lo == 1 || (lo == 0 && hi == n - 1);
}

/// True if d is normalized, in range for n and not a side.
bool is_valid_diagonal(int n, Diagonal d);

/// Builds a normalized diagonal from two labels in any order. Throws InputError
/// when the labels are out of range, equal, or adjacent on the cycle.
Diagonal make_diagonal(int n, int u, int v);

/// True iff the open chords intersect. Sharing an endpoint is not crossing.
/// Throws InputError if either diagonal is invalid for n.
bool crosses(int n, Diagonal d1, Diagonal d2);

/// True iff `diagonals` is a set of n-3 valid, distinct, pairwise non-crossing
/// diagonals. Never throws.
bool is_triangulation(int n, std::span<const Diagonal> diagonals);

/// A sorted vertex triple.
struct Triangle {
    std::array<int, 3> v{};

    Triangle() = default;
    Triangle(int x, int y, int z);

    /// Number of the triangle's sides that are polygon sides.
    int boundary_sides(int n) const;

    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

class Triangulation {
public:
    /// Validates and sorts; throws InputError if the set is not a triangulation.
    Triangulation(int n, std::vector<Diagonal> diagonals);

    /// Skips validation. For constructors whose output is valid by construction.
    static Triangulation trusted(int n, std::vector<Diagonal> diagonals);

    int n() const { return n_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    bool contains(Diagonal d) const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend auto operator<=>(const Triangulation& x, const Triangulation& y) {
        if (auto c = x.n_ <=> y.n_; c != 0) return c;
        return x.diagonals_ <=> y.diagonals_;
    }

private:
    Triangulation() = default;

    int n_ = 3;
    std::vector<Diagonal> diagonals_;
};

using TriangulationVisitor = std::function<void(const Triangulation&)>;

/// Streams every triangulation of the n-gon exactly once. Order: recursion on the
/// apex of the triangle over side 0-1, apex ascending, then recursively the same
/// rule on the pending sub-polygons. Throws InputError for n < 3.
void for_each_triangulation(int n, const TriangulationVisitor& visit);

/// Streams only the triangulations whose triangle over side 0-1 has the given
/// apex (2 <= apex <= n-1). Concatenating apex = 2..n-1 reproduces
/// for_each_triangulation; used to partition brute-force work.
void for_each_triangulation_with_apex(int n, int apex, const TriangulationVisitor& visit);

std::vector<Triangulation> enumerate_triangulations(int n);

/// The n-2 triangles, sorted.
std::vector<Triangle> triangles_of(const Triangulation& t);

/// Triangles with exactly two polygon sides. Requires n >= 4.
std::vector<Triangle> ears_of(const Triangulation& t);

/// Triangles with no polygon side.
std::vector<Triangle> internal_triangles_of(const Triangulation& t);

int ear_count(const Triangulation& t);

/// Dual graph of a triangulation: one node per triangle, an edge per diagonal.
struct DualTree {
    std::vector<Triangle> nodes;
    std::vector<std::vector<int>> adjacency;

    std::size_t edge_count() const;
    int degree(int node) const { return static_cast<int>(adjacency[node].size()); }
    std::vector<int> leaves() const;
    std::vector<int> nodes_of_degree(int d) const;
    bool is_tree() const;
};

/// Requires n >= 4.
DualTree dual_tree(const Triangulation& t);

/// v -> (v + shift) mod n.
Triangulation rotate(const Triangulation& t, int shift);
/// v -> (n - v) mod n.
Triangulation reflect(const Triangulation& t);
/// rotate(reflected ? reflect(t) : t, shift). Enumerates the dihedral group as
/// (shift, reflected) over 0 <= shift < n.
Triangulation apply_dihedral(const Triangulation& t, int shift, bool reflected);

/// Lexicographically least diagonal list among the 2n dihedral images.
Triangulation canonical_form(const Triangulation& t);

/// True iff the diagonal sets are disjoint. Throws InputError if the sizes differ.
bool are_disjoint(const Triangulation& t1, const Triangulation& t2);

/// Text form `n:a-b,c-d,...`, diagonals ascending.
std::string format_triangulation(const Triangulation& t);
/// Parses the text form. Diagonals may appear in any order; each must be written
/// with a < b. Rejects duplicates, sides, out-of-range labels and anything that is
/// not a triangulation.
Triangulation parse_triangulation(std::string_view text);

std::string format_triangle(const Triangle& tri);

std::ostream& operator<<(std::ostream& os, const Triangulation& t);
std::ostream& operator<<(std::ostream& os, const Diagonal& d);
std::ostream& operator<<(std::ostream& os, const Triangle& tri);

}  // namespace fewears

#endif  // FEWEARS_TRIANGULATION_HPP
