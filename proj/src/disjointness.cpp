#include "fewears/disjointness.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>

#include "fewears/compositions.hpp"
#include "fewears/counting.hpp"
#include "fewears/errors.hpp"

namespace fewears {

namespace {

void require_n(int n, int min_n, const char* what) {
    if (n < min_n) {
        throw InputError(std::string(what) + " needs n >= " + std::to_string(min_n) + ", got " + std::to_string(n));
    }
}

void require_three_ear_type(int n, const EarType& t, const char* what) {
    if (t.p < 1 || t.q < 1 || t.r < 1 || t.total() != n - 3) {
        throw InputError(std::string(what) + ": type " + format_ear_type(t) + " needs p,q,r >= 1 and p+q+r = n-3 = " +
                         std::to_string(n - 3));
    }
}

// f(i,j): triangulations of the sub-polygon i, i+1, ..., j whose diagonals avoid
// the forbidden set, given that the base chord i-j is present. The apex k of the
// triangle over i-j splits it into (i..k) and (k..j).
template <class Count>
Count avoid_table(int n, const std::vector<std::vector<char>>& forbidden) {
    std::vector<std::vector<Count>> f(n, std::vector<Count>(n, Count(0)));
    auto usable = [&](int u, int v) { return v - u == 1 || !forbidden[u][v]; };
    for (int i = 0; i + 1 < n; ++i) f[i][i + 1] = 1;
    for (int len = 2; len < n; ++len) {
        for (int i = 0; i + len < n; ++i) {
            const int j = i + len;
            Count total = 0;
            for (int k = i + 1; k < j; ++k) {
                if (usable(i, k) && usable(k, j)) total += f[i][k] * f[k][j];
            }
            f[i][j] = total;
        }
    }
    return f[0][n - 1];
}

using Series = std::vector<ExactCount>;

Series multiply(const Series& x, const Series& y, std::size_t terms) {
    Series out(terms, 0);
    for (std::size_t i = 0; i < x.size() && i < terms; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size() && i + j < terms; ++j) out[i + j] += x[i] * y[j];
    }
    return out;
}

}  // namespace

EarType EarType::sorted() const {
    std::array<int, 3> v{p, q, r};
    std::sort(v.begin(), v.end(), std::greater<>());
    return EarType{v[0], v[1], v[2]};
}

bool same_type(const EarType& x, const EarType& y) { return x.sorted() == y.sorted(); }

std::string format_ear_type(const EarType& t) {
    return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ")";
}

EarType parse_ear_type(std::string_view text) {
    std::array<int, 3> v{};
    std::string_view rest = text;
    for (int i = 0; i < 3; ++i) {
        const auto comma = rest.find(',');
        if ((i < 2) == (comma == std::string_view::npos)) {
            throw InputError("ear type must be 'p,q,r', got '" + std::string(text) + "'");
        }
        const std::string_view item = rest.substr(0, comma);
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v[i]);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v[i] < 0) {
            throw InputError("ear type must be 'p,q,r', got '" + std::string(text) + "'");
        }
        if (comma != std::string_view::npos) rest = rest.substr(comma + 1);
    }
    return EarType{v[0], v[1], v[2]};
}

Triangulation arrow(int n) {
    require_n(n, 4, "arrow");
    std::vector<Diagonal> diags;
    for (int v = 3; v <= n - 1; ++v) diags.push_back({1, v});
    return Triangulation::trusted(n, std::move(diags));
}

Triangulation snake(int n) {
    require_n(n, 4, "snake");
    std::vector<int> path{0, 2};
    int low = 3;
    int high = n - 1;
    bool take_high = true;
    while (static_cast<int>(path.size()) < n - 2) {
        path.push_back(take_high ? high-- : low++);
        take_high = !take_high;
    }
    std::vector<Diagonal> diags;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int u = path[i];
        const int v = path[i + 1];
        diags.push_back(u < v ? Diagonal{u, v} : Diagonal{v, u});
    }
    return Triangulation::trusted(n, std::move(diags));
}

Triangulation three_ear_rep(int n, const EarType& t) {
    require_three_ear_type(n, t, "three_ear_rep");
    const int b = t.p + 1;
    const int c = t.p + t.q + 2;
    std::vector<Diagonal> diags;
    for (int v = 2; v <= b; ++v) diags.push_back({0, v});
    for (int v = b + 2; v <= c; ++v) diags.push_back({b, v});
    for (int v = c + 2; v <= n - 1; ++v) diags.push_back({c, v});
    diags.push_back({0, c});
    return Triangulation(n, std::move(diags));
}

EarType three_ear_type(const Triangulation& t) {
    if (t.n() < 6) throw DomainError(format_triangulation(t) + " cannot have 3 ears");
    const DualTree tree = dual_tree(t);
    const auto centers = tree.nodes_of_degree(3);
    if (centers.size() != 1 || tree.leaves().size() != 3) {
        throw DomainError(format_triangulation(t) + " is not 3-eared");
    }
    const int center = centers.front();
    std::array<int, 3> lengths{};
    for (int b = 0; b < 3; ++b) {
        int prev = center;
        int cur = tree.adjacency[center][b];
        int len = 1;
        while (tree.degree(cur) == 2) {
            const int next = tree.adjacency[cur][0] == prev ? tree.adjacency[cur][1] : tree.adjacency[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        lengths[b] = len;
    }
    return EarType{lengths[0], lengths[1], lengths[2]}.sorted();
}

ExactCount count_avoiding(int n, std::span<const Diagonal> forbidden) {
    require_n(n, 3, "count_avoiding");
    std::vector<std::vector<char>> mask(n, std::vector<char>(n, 0));
    for (const Diagonal& d : forbidden) {
        if (!is_valid_diagonal(n, d)) {
            throw InputError("forbidden chord " + std::to_string(d.a) + "-" + std::to_string(d.b) +
                             " is not a diagonal of the " + std::to_string(n) + "-gon");
        }
        mask[d.a][d.b] = 1;
    }
    // C_{n-2} fits in 64 bits up to n = 37; every partial sum is bounded by it.
    if (n <= 36) return ExactCount(avoid_table<std::uint64_t>(n, mask));
    return avoid_table<ExactCount>(n, mask);
}

ExactCount disj_count(const Triangulation& t) { return count_avoiding(t.n(), t.diagonals()); }

ExactCount disj_count_by_enumeration(const Triangulation& t) {
    ExactCount count = 0;
    for_each_triangulation(t.n(), [&](const Triangulation& other) {
        if (are_disjoint(t, other)) ++count;
    });
    return count;
}

ExactCount disj_2ear_formula(int n) {
    require_n(n, 4, "disj_2ear_formula");
    return catalan(n - 3);
}

ExactCount disj_inclusion_exclusion(int n) {
    require_n(n, 4, "disj_inclusion_exclusion");
    ExactCount sum = 0;
    for_each_composition(n - 2, [&](const Composition& c) {
        ExactCount term = 1;
        for (int a : c.parts()) term *= catalan(a);
        if (c.parts().size() % 2 == 1) sum += term; else sum -= term;
    });
    return sum;
}

std::vector<ExactCount> disj_series_coefficients(int order) {
    if (order < 1) throw InputError("series order must be >= 1, got " + std::to_string(order));
    const std::size_t terms = static_cast<std::size_t>(order) + 1;
    // c(x) from its functional equation c = 1 + x c^2, one more term than needed
    // so that s(x) = (c(x) - 1)/x is exact to x^order.
    Series c(terms + 1, 0);
    c[0] = 1;
    for (std::size_t iter = 0; iter <= terms; ++iter) {
        const Series sq = multiply(c, c, terms);
        Series next(terms + 1, 0);
        next[0] = 1;
        for (std::size_t i = 0; i < sq.size(); ++i) next[i + 1] = sq[i];
        c = std::move(next);
    }
    Series s(c.begin() + 1, c.end());
    Series xs(terms, 0);
    for (std::size_t i = 0; i + 1 < terms; ++i) xs[i + 1] = s[i];

    Series result(terms, 0);
    Series power = s;
    power.resize(terms);
    for (std::size_t i = 0; i < terms; ++i) {
        for (std::size_t k = 0; k < terms; ++k) {
            if (i % 2 == 0) result[k] += power[k]; else result[k] -= power[k];
        }
        power = multiply(power, xs, terms);
    }
    return result;
}

ExactCount m_forb_formula(int n, int m) {
    require_n(n, 3, "m_forb_formula");
    if (m < 0 || m > n - 3) {
        throw InputError("m must lie in 0..n-3 = 0.." + std::to_string(n - 3) + ", got " + std::to_string(m));
    }
    ExactCount sum = 0;
    for (int i = 0; i <= n - 3 - m; ++i) sum += catalan(i) * catalan(n - 3 - i);
    return sum;
}

std::vector<Diagonal> m_forb_diagonals(int n, int m, int apex) {
    if (m < 0 || m > n - 3) throw InputError("m must lie in 0..n-3");
    if (apex < 0 || apex >= n) throw InputError("apex out of range");
    std::vector<Diagonal> out;
    for (int step = 2; step <= m + 1; ++step) out.push_back(make_diagonal(n, apex, (apex + step) % n));
    std::sort(out.begin(), out.end());
    return out;
}

ExactCount disj_3ear_cases(int n, const EarType& t) {
    require_three_ear_type(n, t, "disj_3ear_cases");
    ExactCount with_side_chord = 0;
    for (int i = 0; i <= n - 4 - t.q; ++i) with_side_chord += catalan(i) * catalan(n - 4 - i);
    ExactCount without = 0;
    for (int j = t.p; j <= t.p + t.q - 1; ++j) without += catalan(j) * catalan(n - 4 - j);
    return with_side_chord + without;
}

ExactCount disj_3ear_shifted(int n, const EarType& t) {
    if (t.p < 0 || t.q < 0 || t.r < 0 || t.total() != n - 3 || n < 4) {
        throw InputError("disj_3ear_shifted: type " + format_ear_type(t) + " needs nonnegative branches summing to n-3");
    }
    return 2 * catalan(n - 3) - catalan_partial_convolution(n, t.p - 1) - catalan_partial_convolution(n, t.q - 1) -
           catalan_partial_convolution(n, t.r - 1);
}

ExactCount disj_3ear_printed(int n, const EarType& t) {
    require_three_ear_type(n, t, "disj_3ear_printed");
    return 2 * catalan(n - 3) - catalan_partial_convolution(n, t.p) - catalan_partial_convolution(n, t.q) -
           catalan_partial_convolution(n, t.r);
}

int parallel_residue(int n, int a, int b) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
        throw InputError("chord " + std::to_string(a) + "-" + std::to_string(b) + " invalid for n=" + std::to_string(n));
    }
    return (a + b) % n;
}

std::vector<Diagonal> parallel_class_diagonals(int n, const std::set<int>& residues) {
    std::vector<Diagonal> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 2; b < n; ++b) {
            if (is_side(n, a, b)) continue;
            if (residues.count(parallel_residue(n, a, b))) out.push_back({a, b});
        }
    }
    return out;
}

ExactCount count_avoiding_parallel(int n, const std::set<int>& residues) {
    require_n(n, 4, "count_avoiding_parallel");
    return count_avoiding(n, parallel_class_diagonals(n, residues));
}

InternalSignature internal_signature(const Triangulation& t) { return {internal_triangles_of(t)}; }

std::string format_signature(const InternalSignature& s) {
    std::string out = "{";
    for (const Triangle& tri : s.triangles) {
        if (out.size() > 1) out += ',';
        out += format_triangle(tri);
    }
    return out + "}";
}

SignatureReport signature_invariance_check(int n, int threads) {
    if (n < 4 || n > 11) throw InputError("signature check needs 4 <= n <= 11, got " + std::to_string(n));
    const std::vector<Triangulation> all = enumerate_triangulations(n);
    const auto pairwise = parallel_map(all.size(), threads, [&](std::size_t i) {
        long long count = 0;
        for (const Triangulation& other : all) {
            if (are_disjoint(all[i], other)) ++count;
        }
        return count;
    });

    SignatureReport report;
    report.n = n;
    std::map<InternalSignature, std::pair<std::size_t, std::size_t>> first_and_size;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (!report.oracle_mismatch && disj_count(all[i]) != pairwise[i]) report.oracle_mismatch = all[i];
        auto [it, inserted] = first_and_size.try_emplace(internal_signature(all[i]), i, 0);
        ++it->second.second;
        const std::size_t first = it->second.first;
        if (!report.counterexample && pairwise[first] != pairwise[i]) {
            report.counterexample = std::make_pair(all[first], all[i]);
        }
    }
    for (const auto& [sig, entry] : first_and_size) {
        report.groups.push_back(SignatureGroup{sig, entry.second, ExactCount(pairwise[entry.first])});
    }
    return report;
}

ExactCount total_disjoint_pairs(int n, int threads) {
    require_n(n, 3, "total_disjoint_pairs");
    const auto parts = parallel_map(static_cast<std::size_t>(n >= 4 ? n - 2 : 1), threads, [&](std::size_t i) {
        ExactCount sum = 0;
        for_each_triangulation_with_apex(n, static_cast<int>(i) + 2, [&](const Triangulation& t) { sum += disj_count(t); });
        return sum;
    });
    ExactCount total = 0;
    for (const auto& p : parts) total += p;
    return total;
}

}  // namespace fewears
