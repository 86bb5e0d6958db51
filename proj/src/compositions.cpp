#include "fewears/compositions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>

#include "fewears/errors.hpp"

namespace fewears {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("a composition needs at least one part");
    for (int p : parts_) {
        if (p < 1) throw InputError("composition parts must be positive, got " + std::to_string(p));
        total_ += p;
    }
}

BarSet to_barset(const Composition& c) {
    BarSet b{c.total(), {}};
    int sum = 0;
    for (std::size_t i = 0; i + 1 < c.parts().size(); ++i) {
        sum += c.parts()[i];
        b.bars.push_back(sum);
    }
    return b;
}

Composition from_barset(const BarSet& b) {
    if (b.m < 1) throw InputError("bar set total must be >= 1");
    std::vector<int> bars = b.bars;
    std::sort(bars.begin(), bars.end());
    if (std::adjacent_find(bars.begin(), bars.end()) != bars.end()) throw InputError("repeated bar");
    std::vector<int> parts;
    int prev = 0;
    for (int bar : bars) {
        if (bar < 1 || bar > b.m - 1) {
            throw InputError("bar " + std::to_string(bar) + " outside 1.." + std::to_string(b.m - 1));
        }
        parts.push_back(bar - prev);
        prev = bar;
    }
    parts.push_back(b.m - prev);
    return Composition(std::move(parts));
}

void for_each_composition(int m, const std::function<void(const Composition&)>& visit) {
    if (m < 1) throw InputError("compositions need m >= 1, got " + std::to_string(m));
    if (m > 63) throw InputError("m too large to enumerate: " + std::to_string(m));
    const std::uint64_t count = std::uint64_t{1} << (m - 1);
    std::vector<int> parts;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        parts.clear();
        int prev = 0;
        for (int gap = 1; gap < m; ++gap) {
            if (mask >> (gap - 1) & 1U) {
                parts.push_back(gap - prev);
                prev = gap;
            }
        }
        parts.push_back(m - prev);
        visit(Composition(parts));
    }
}

std::vector<Composition> enumerate_compositions(int m) {
    std::vector<Composition> out;
    for_each_composition(m, [&](const Composition& c) { out.push_back(c); });
    return out;
}

Composition conjugate(const Composition& c) {
    const BarSet b = to_barset(c);
    BarSet complement{b.m, {}};
    auto it = b.bars.begin();
    for (int gap = 1; gap < b.m; ++gap) {
        if (it != b.bars.end() && *it == gap) {
            ++it;
        } else {
            complement.bars.push_back(gap);
        }
    }
    return from_barset(complement);
}

Composition reverse(const Composition& c) {
    std::vector<int> parts(c.parts().rbegin(), c.parts().rend());
    return Composition(std::move(parts));
}

std::vector<Composition> class_of(const Composition& c) {
    const Composition r = reverse(c);
    std::vector<Composition> orbit{c, r, conjugate(c), conjugate(r)};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

ExactCount count_fixed(int m, FixedOp op) {
    if (m < 1) throw InputError("count_fixed needs m >= 1");
    switch (op) {
        case FixedOp::Reversal:
            return ExactCount(1) << (m / 2);
        case FixedOp::Conjugation:
            return m == 1 ? 1 : 0;
        case FixedOp::ConjRev:
            return m % 2 == 1 ? ExactCount(ExactCount(1) << (m / 2)) : ExactCount(0);
    }
    throw InputError("unknown fixed-point operation");
}

ExactCount count_fixed_direct(int m, FixedOp op) {
    ExactCount fixed = 0;
    for_each_composition(m, [&](const Composition& c) {
        bool hit = false;
        switch (op) {
            case FixedOp::Reversal: hit = reverse(c) == c; break;
            case FixedOp::Conjugation: hit = conjugate(c) == c; break;
            case FixedOp::ConjRev: hit = conjugate(c) == reverse(c); break;
        }
        if (hit) ++fixed;
    });
    return fixed;
}

ExactCount count_classes(int m, ClassCountMethod method) {
    if (m < 1) throw InputError("count_classes needs m >= 1");
    switch (method) {
        case ClassCountMethod::Closed: {
            if (m < 2) {
                throw DomainError("closed class count assumes m > 1 (no self-conjugate compositions); got m=1");
            }
            // floor((m-3)/2) for possibly negative m-3
            const int half = (m - 3) >= 0 ? (m - 3) / 2 : -((4 - m) / 2);
            return require_integral(pow2(m - 3) + pow2(half), "closed composition class count");
        }
        case ClassCountMethod::Burnside: {
            const ExactCount sum = (ExactCount(1) << (m - 1)) + count_fixed(m, FixedOp::Reversal) +
                                   count_fixed(m, FixedOp::Conjugation) + count_fixed(m, FixedOp::ConjRev);
            return require_integral(Rational(sum, 4), "Burnside composition class count");
        }
        case ClassCountMethod::Direct: {
            ExactCount classes = 0;
            for_each_composition(m, [&](const Composition& c) {
                if (class_of(c).front() == c) ++classes;
            });
            return classes;
        }
    }
    throw InputError("unknown class-count method");
}

PointingString two_eared_to_string(const Triangulation& t) {
    const int n = t.n();
    if (n < 5) throw DomainError("pointing strings need n >= 5, got " + std::to_string(n));
    const auto ears = ears_of(t);
    if (ears.size() != 2) {
        throw DomainError(format_triangulation(t) + " has " + std::to_string(ears.size()) + " ears, expected 2");
    }
    const Triangle& left = ears.front();
    int tip = -1;
    for (int v : left.v) {
        const int prev = (v + n - 1) % n;
        const int next = (v + 1) % n;
        const bool has_prev = std::find(left.v.begin(), left.v.end(), prev) != left.v.end();
        const bool has_next = std::find(left.v.begin(), left.v.end(), next) != left.v.end();
        if (has_prev && has_next) tip = v;
    }
    // Relabel so the tip becomes 0; the top path then runs 1, 2, ...
    auto relabel = [&](int v) { return (v - tip + n) % n; };
    std::set<Diagonal> diags;
    for (const Diagonal& d : t.diagonals()) {
        const int u = relabel(d.a);
        const int w = relabel(d.b);
        diags.insert(u < w ? Diagonal{u, w} : Diagonal{w, u});
    }
    PointingString s{n, {}};
    int a = 1;
    int b = n - 1;
    for (int step = 0; step < n - 4; ++step) {
        if (diags.count(Diagonal{a + 1, b})) {
            s.dirs.push_back(Pointing::Down);
            ++a;
        } else if (diags.count(Diagonal{a, b - 1})) {
            s.dirs.push_back(Pointing::Up);
            --b;
        } else {
            throw InvariantError("dual path of " + format_triangulation(t) + " is broken at chord " +
                                 std::to_string(a) + "-" + std::to_string(b));
        }
    }
    return s;
}

Triangulation string_to_two_eared(const PointingString& s) {
    const int n = s.n;
    if (n < 5) throw InputError("pointing strings need n >= 5, got " + std::to_string(n));
    if (static_cast<int>(s.dirs.size()) != n - 4) {
        throw InputError("pointing string for n=" + std::to_string(n) + " must have length " +
                         std::to_string(n - 4) + ", got " + std::to_string(s.dirs.size()));
    }
    std::vector<Diagonal> diags;
    int a = 1;
    int b = n - 1;
    diags.push_back({a, b});
    for (Pointing p : s.dirs) {
        if (p == Pointing::Down) ++a; else --b;
        diags.push_back({a, b});
    }
    return Triangulation::trusted(n, std::move(diags));
}

Composition string_to_composition(const PointingString& s) {
    if (static_cast<int>(s.dirs.size()) != s.n - 4 || s.n < 5) {
        throw InputError("pointing string length does not match n=" + std::to_string(s.n));
    }
    BarSet b{s.n - 3, {}};
    for (std::size_t i = 0; i < s.dirs.size(); ++i) {
        if (s.dirs[i] == Pointing::Up) b.bars.push_back(static_cast<int>(i) + 1);
    }
    return from_barset(b);
}

PointingString composition_to_string(const Composition& c, int n) {
    if (c.total() != n - 3) {
        throw InputError("composition of " + std::to_string(c.total()) + " does not match n=" + std::to_string(n) +
                         " (needs total n-3)");
    }
    if (n < 5) throw InputError("pointing strings need n >= 5");
    PointingString s{n, std::vector<Pointing>(n - 4, Pointing::Down)};
    for (int bar : to_barset(c).bars) s.dirs[bar - 1] = Pointing::Up;
    return s;
}

std::string format_composition(const Composition& c) {
    std::string out;
    for (int p : c.parts()) {
        if (!out.empty()) out += '+';
        out += std::to_string(p);
    }
    return out;
}

Composition parse_composition(std::string_view text) {
    std::vector<int> parts;
    std::string_view rest = text;
    while (true) {
        const auto plus = rest.find('+');
        const std::string_view item = rest.substr(0, plus);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw InputError("malformed composition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (plus == std::string_view::npos) break;
        rest = rest.substr(plus + 1);
    }
    return Composition(std::move(parts));
}

std::string format_pointing(const PointingString& s) {
    std::string out;
    for (Pointing p : s.dirs) out += p == Pointing::Up ? 'U' : 'D';
    return out;
}

PointingString parse_pointing(std::string_view text) {
    if (text.empty()) throw InputError("empty pointing string");
    PointingString s{static_cast<int>(text.size()) + 4, {}};
    for (char ch : text) {
        if (ch == 'U') {
            s.dirs.push_back(Pointing::Up);
        } else if (ch == 'D') {
            s.dirs.push_back(Pointing::Down);
        } else {
            throw InputError("pointing strings use only U and D, got '" + std::string(text) + "'");
        }
    }
    return s;
}

}  // namespace fewears
