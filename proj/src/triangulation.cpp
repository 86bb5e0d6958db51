#include "fewears/triangulation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <sstream>

#include "fewears/errors.hpp"

namespace fewears {

namespace {

std::string diag_str(Diagonal d) { return std::to_string(d.a) + "-" + std::to_string(d.b); }

void require_n(int n, int min_n, const char* what) {
    if (n < min_n) {
        throw InputError(std::string(what) + ": polygon size must be >= " + std::to_string(min_n) +
                         ", got " + std::to_string(n));
    }
}

// Every sub-polygon met during enumeration is a cyclic run of labels
// start, start+1, ..., start+len-1 (mod n) whose base chord joins the two ends.
struct Run {
    int start;
    int len;
};

class Enumerator {
public:
    Enumerator(int n, const TriangulationVisitor& visit) : n_(n), visit_(visit) {
        diagonals_.reserve(n > 3 ? n - 3 : 0);
    }

    // Top level: the run 1, 2, ..., n-1, 0 with base side 0-1.
    void run_all() {
        for (int offset = 1; offset <= n_ - 2; ++offset) split_top(offset);
    }

    void run_apex(int apex) { split_top(apex - 1); }

private:
    void split_top(int offset) {
        pending_.clear();
        diagonals_.clear();
        place(Run{1 % n_, n_}, offset);
    }

    int label(const Run& r, int offset) const { return (r.start + offset) % n_; }

    // Places the apex at `offset` inside run r, records the new chords, explores
    // everything below, then undoes.
    void place(const Run& r, int offset) {
        const int left_len = offset + 1;
        const int right_len = r.len - offset;
        int added = 0;
        if (left_len >= 3) {
            diagonals_.push_back(normalized(label(r, 0), label(r, offset)));
            ++added;
            pending_.push_back(Run{r.start, left_len});
        }
        if (right_len >= 3) {
            diagonals_.push_back(normalized(label(r, offset), label(r, r.len - 1)));
            ++added;
            pending_.push_back(Run{label(r, offset), right_len});
        }
        descend();
        for (int i = 0; i < added; ++i) {
            diagonals_.pop_back();
            pending_.pop_back();
        }
    }

    void descend() {
        if (pending_.empty()) {
            std::vector<Diagonal> sorted = diagonals_;
            std::sort(sorted.begin(), sorted.end());
            visit_(Triangulation::trusted(n_, std::move(sorted)));
            return;
        }
        const Run r = pending_.back();
        pending_.pop_back();
        for (int offset = 1; offset <= r.len - 2; ++offset) place(r, offset);
        pending_.push_back(r);
    }

    static Diagonal normalized(int u, int v) { return u < v ? Diagonal{u, v} : Diagonal{v, u}; }

    int n_;
    const TriangulationVisitor& visit_;
    std::vector<Run> pending_;
    std::vector<Diagonal> diagonals_;
};

bool is_side_of(int n, int u, int v) { return is_side(n, u, v); }

}  // namespace

bool is_valid_diagonal(int n, Diagonal d) {
    return n >= 4 && d.a >= 0 && d.b < n && d.b - d.a >= 2 && !(d.a == 0 && d.b == n - 1);
}

Diagonal make_diagonal(int n, int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("label out of range for n=" + std::to_string(n) + ": " + std::to_string(u) +
                         "-" + std::to_string(v));
    }
    if (u == v) throw InputError("degenerate chord " + std::to_string(u) + "-" + std::to_string(v));
    Diagonal d = u < v ? Diagonal{u, v} : Diagonal{v, u};
    if (is_side(n, d.a, d.b)) throw InputError(diag_str(d) + " is a side of the " + std::to_string(n) + "-gon");
    return d;
}

bool crosses(int n, Diagonal d1, Diagonal d2) {
    if (!is_valid_diagonal(n, d1)) throw InputError("invalid diagonal " + diag_str(d1) + " for n=" + std::to_string(n));
    if (!is_valid_diagonal(n, d2)) throw InputError("invalid diagonal " + diag_str(d2) + " for n=" + std::to_string(n));
    if (d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b) return false;
    const bool c_inside = d1.a < d2.a && d2.a < d1.b;
    const bool d_inside = d1.a < d2.b && d2.b < d1.b;
    return c_inside != d_inside;
}

bool is_triangulation(int n, std::span<const Diagonal> diagonals) {
    if (n < 3) return false;
    if (static_cast<int>(diagonals.size()) != n - 3) return false;
    for (const Diagonal& d : diagonals) {
        if (!is_valid_diagonal(n, d)) return false;
    }
    for (std::size_t i = 0; i < diagonals.size(); ++i) {
        for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
            if (diagonals[i] == diagonals[j] || crosses(n, diagonals[i], diagonals[j])) return false;
        }
    }
    return true;
}

Triangle::Triangle(int x, int y, int z) : v{x, y, z} { std::sort(v.begin(), v.end()); }

int Triangle::boundary_sides(int n) const {
    return int(is_side_of(n, v[0], v[1])) + int(is_side_of(n, v[1], v[2])) + int(is_side_of(n, v[0], v[2]));
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals) {
    if (n < 3) throw InputError("polygon size must be >= 3, got " + std::to_string(n));
    std::sort(diagonals.begin(), diagonals.end());
    if (!is_triangulation(n, diagonals)) {
        std::string listing;
        for (const Diagonal& d : diagonals) listing += (listing.empty() ? "" : ",") + diag_str(d);
        throw InputError("not a triangulation of the " + std::to_string(n) + "-gon: {" + listing + "}");
    }
    n_ = n;
    diagonals_ = std::move(diagonals);
}

Triangulation Triangulation::trusted(int n, std::vector<Diagonal> diagonals) {
    Triangulation t;
    t.n_ = n;
    t.diagonals_ = std::move(diagonals);
    std::sort(t.diagonals_.begin(), t.diagonals_.end());
    return t;
}

bool Triangulation::contains(Diagonal d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

void for_each_triangulation(int n, const TriangulationVisitor& visit) {
    require_n(n, 3, "enumerate_triangulations");
    if (n == 3) {
        visit(Triangulation::trusted(3, {}));
        return;
    }
    Enumerator(n, visit).run_all();
}

void for_each_triangulation_with_apex(int n, int apex, const TriangulationVisitor& visit) {
    require_n(n, 3, "enumerate_triangulations");
    if (apex < 2 || apex > n - 1) {
        throw InputError("apex must lie in 2.." + std::to_string(n - 1) + ", got " + std::to_string(apex));
    }
    if (n == 3) {
        visit(Triangulation::trusted(3, {}));
        return;
    }
    Enumerator(n, visit).run_apex(apex);
}

std::vector<Triangulation> enumerate_triangulations(int n) {
    std::vector<Triangulation> out;
    for_each_triangulation(n, [&](const Triangulation& t) { out.push_back(t); });
    return out;
}

std::vector<Triangle> triangles_of(const Triangulation& t) {
    const int n = t.n();
    // Neighbours of each vertex among the larger labels; in a maximal outerplanar
    // graph consecutive such neighbours of a form a face with a.
    std::vector<std::vector<int>> higher(n);
    for (int v = 0; v + 1 < n; ++v) higher[v].push_back(v + 1);
    higher[0].push_back(n - 1);
    for (const Diagonal& d : t.diagonals()) higher[d.a].push_back(d.b);
    std::vector<Triangle> out;
    out.reserve(n - 2);
    for (int a = 0; a < n; ++a) {
        auto& nb = higher[a];
        std::sort(nb.begin(), nb.end());
        for (std::size_t i = 0; i + 1 < nb.size(); ++i) out.emplace_back(a, nb[i], nb[i + 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triangle> ears_of(const Triangulation& t) {
    require_n(t.n(), 4, "ears_of");
    std::vector<Triangle> out;
    for (const Triangle& tri : triangles_of(t)) {
        if (tri.boundary_sides(t.n()) == 2) out.push_back(tri);
    }
    return out;
}

std::vector<Triangle> internal_triangles_of(const Triangulation& t) {
    std::vector<Triangle> out;
    for (const Triangle& tri : triangles_of(t)) {
        if (tri.boundary_sides(t.n()) == 0) out.push_back(tri);
    }
    return out;
}

int ear_count(const Triangulation& t) { return static_cast<int>(ears_of(t).size()); }

std::size_t DualTree::edge_count() const {
    std::size_t twice = 0;
    for (const auto& adj : adjacency) twice += adj.size();
    return twice / 2;
}

std::vector<int> DualTree::leaves() const { return nodes_of_degree(1); }

std::vector<int> DualTree::nodes_of_degree(int d) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        if (degree(i) == d) out.push_back(i);
    }
    return out;
}

bool DualTree::is_tree() const {
    if (nodes.empty()) return false;
    if (edge_count() + 1 != nodes.size()) return false;
    std::vector<char> seen(nodes.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adjacency[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == nodes.size();
}

DualTree dual_tree(const Triangulation& t) {
    require_n(t.n(), 4, "dual_tree");
    DualTree tree;
    tree.nodes = triangles_of(t);
    tree.adjacency.assign(tree.nodes.size(), {});
    std::map<Diagonal, int> first_owner;
    for (int i = 0; i < static_cast<int>(tree.nodes.size()); ++i) {
        const auto& v = tree.nodes[i].v;
        const std::array<std::pair<int, int>, 3> sides{{{v[0], v[1]}, {v[1], v[2]}, {v[0], v[2]}}};
        for (auto [a, b] : sides) {
            if (is_side(t.n(), a, b)) continue;
            const Diagonal d{a, b};
            auto [it, inserted] = first_owner.emplace(d, i);
            if (!inserted) {
                tree.adjacency[it->second].push_back(i);
                tree.adjacency[i].push_back(it->second);
            }
        }
    }
    return tree;
}

Triangulation apply_dihedral(const Triangulation& t, int shift, bool reflected) {
    const int n = t.n();
    std::vector<Diagonal> out;
    out.reserve(t.diagonals().size());
    for (const Diagonal& d : t.diagonals()) {
        int u = d.a;
        int v = d.b;
        if (reflected) {
            u = (n - u) % n;
            v = (n - v) % n;
        }
        u = (u + shift) % n;
        v = (v + shift) % n;
        out.push_back(u < v ? Diagonal{u, v} : Diagonal{v, u});
    }
    return Triangulation::trusted(n, std::move(out));
}

Triangulation rotate(const Triangulation& t, int shift) {
    if (shift < 0 || shift >= t.n()) {
        throw InputError("rotation shift must lie in 0.." + std::to_string(t.n() - 1));
    }
    return apply_dihedral(t, shift, false);
}

Triangulation reflect(const Triangulation& t) { return apply_dihedral(t, 0, true); }

Triangulation canonical_form(const Triangulation& t) {
    const int n = t.n();
    std::vector<Diagonal> best = t.diagonals();
    std::vector<Diagonal> image(best.size());
    for (int reflected = 0; reflected < 2; ++reflected) {
        for (int shift = 0; shift < n; ++shift) {
            for (std::size_t i = 0; i < best.size(); ++i) {
                int u = t.diagonals()[i].a;
                int v = t.diagonals()[i].b;
                if (reflected) {
                    u = (n - u) % n;
                    v = (n - v) % n;
                }
                u = (u + shift) % n;
                v = (v + shift) % n;
                image[i] = u < v ? Diagonal{u, v} : Diagonal{v, u};
            }
            std::sort(image.begin(), image.end());
            if (image < best) best = image;
        }
    }
    return Triangulation::trusted(n, std::move(best));
}

bool are_disjoint(const Triangulation& t1, const Triangulation& t2) {
    if (t1.n() != t2.n()) {
        throw InputError("are_disjoint: polygon sizes differ (" + std::to_string(t1.n()) + " vs " +
                         std::to_string(t2.n()) + ")");
    }
    // Both lists are sorted.
    auto i = t1.diagonals().begin();
    auto j = t2.diagonals().begin();
    while (i != t1.diagonals().end() && j != t2.diagonals().end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i; else ++j;
    }
    return true;
}

std::string format_triangulation(const Triangulation& t) {
    std::string out = std::to_string(t.n()) + ":";
    bool first = true;
    for (const Diagonal& d : t.diagonals()) {
        if (!first) out += ',';
        out += diag_str(d);
        first = false;
    }
    return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int value = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end) {
        throw InputError("malformed triangulation '" + std::string(whole) + "': bad number '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw InputError("malformed triangulation '" + std::string(text) + "': expected 'n:a-b,...'");
    }
    const int n = parse_int(text.substr(0, colon), text);
    if (n < 3) throw InputError("polygon size must be >= 3 in '" + std::string(text) + "'");
    std::vector<Diagonal> diagonals;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            throw InputError("malformed diagonal '" + std::string(item) + "' in '" + std::string(text) + "'");
        }
        const int a = parse_int(item.substr(0, dash), text);
        const int b = parse_int(item.substr(dash + 1), text);
        if (a >= b) throw InputError("diagonal '" + std::string(item) + "' must be written with a < b");
        if (b >= n) throw InputError("label out of range in '" + std::string(item) + "' for n=" + std::to_string(n));
        if (is_side(n, a, b)) throw InputError("'" + std::string(item) + "' is a side, not a diagonal");
        const Diagonal d{a, b};
        if (std::find(diagonals.begin(), diagonals.end(), d) != diagonals.end()) {
            throw InputError("duplicate diagonal '" + std::string(item) + "'");
        }
        diagonals.push_back(d);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) throw InputError("trailing comma in '" + std::string(text) + "'");
    }
    return Triangulation(n, std::move(diagonals));
}

std::string format_triangle(const Triangle& tri) {
    return "(" + std::to_string(tri.v[0]) + "," + std::to_string(tri.v[1]) + "," + std::to_string(tri.v[2]) + ")";
}

std::ostream& operator<<(std::ostream& os, const Triangulation& t) { return os << format_triangulation(t); }
std::ostream& operator<<(std::ostream& os, const Diagonal& d) { return os << diag_str(d); }
std::ostream& operator<<(std::ostream& os, const Triangle& tri) { return os << format_triangle(tri); }

}  // namespace fewears
