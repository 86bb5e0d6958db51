#include "fewears/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "fewears/compositions.hpp"
#include "fewears/counting.hpp"
#include "fewears/disjointness.hpp"
#include "fewears/errors.hpp"
#include "fewears/triangulation.hpp"

namespace fewears {

namespace {

// Upper limits for the enumerating checks, whatever max_n says.
constexpr int kCompositionEnumerationCap = 20;
constexpr int kInclusionExclusionCap = 24;
constexpr int kSeriesOrder = 20;

class Checks {
public:
    explicit Checks(std::vector<CheckResult>& out) : out_(out) {}

    template <class T>
    void equal(std::string id, int n, std::string params, const T& expected, const T& got) {
        out_.push_back(CheckResult{expected == got ? CheckStatus::Pass : CheckStatus::Fail, std::move(id), n,
                                   std::move(params), str(expected), str(got)});
    }

    void add(CheckResult r) { out_.push_back(std::move(r)); }

    // Runs `body`, turning an escaping exception into a FAIL line for `id`.
    void guarded(const std::string& id, int n, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            std::string what = e.what();
            std::replace(what.begin(), what.end(), ' ', '_');
            out_.push_back(CheckResult{CheckStatus::Fail, id, n, "-", "no-error", "error:" + what});
        }
    }

private:
    static std::string str(const ExactCount& x) { return to_string(x); }
    static std::string str(const std::string& s) { return s; }
    static std::string str(long long x) { return std::to_string(x); }
    static std::string str(int x) { return std::to_string(x); }
    static std::string str(std::size_t x) { return std::to_string(x); }

    std::vector<CheckResult>& out_;
};

struct Range {
    std::optional<int> max_n;

    int hi(SuiteScale scale) const {
        return max_n ? std::min(*max_n, feasible_max_n(scale)) : default_max_n(scale);
    }
};

std::string census_string(const EarCensus& c) {
    std::string out;
    for (const auto& [k, v] : c.counts) {
        if (!out.empty()) out += ';';
        out += std::to_string(k) + ":" + to_string(v);
    }
    return out;
}

// ---- core ----------------------------------------------------------------

void suite_core(const Range& range, Checks& checks) {
    const int hi = range.hi(SuiteScale::Single);
    for (int n = 3; n <= hi; ++n) {
        checks.guarded("catalan-totals", n, [&] {
            std::vector<Triangulation> all = enumerate_triangulations(n);
            std::size_t valid = 0;
            for (const auto& t : all) valid += is_triangulation(n, t.diagonals()) ? 1 : 0;
            std::sort(all.begin(), all.end());
            const auto distinct = static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
            checks.equal("catalan-totals", n, "valid=" + std::to_string(valid), catalan(n - 2),
                         ExactCount(std::min(valid, distinct)));
        });
    }
    for (int n = 4; n <= hi; ++n) {
        checks.guarded("ears-internal", n, [&] {
            const auto all = enumerate_triangulations(n);
            std::size_t ears_ok = 0;
            std::size_t tree_ok = 0;
            std::size_t action_ok = 0;
            std::set<Triangulation> rotated;
            std::set<Triangulation> reflected;
            const std::set<Triangulation> everything(all.begin(), all.end());
            for (const auto& t : all) {
                const auto ears = ears_of(t);
                const auto internal = internal_triangles_of(t);
                if (ears.size() == internal.size() + 2) ++ears_ok;

                const DualTree tree = dual_tree(t);
                std::vector<Triangle> leaves;
                std::vector<Triangle> branching;
                for (int i : tree.leaves()) leaves.push_back(tree.nodes[i]);
                for (int i : tree.nodes_of_degree(3)) branching.push_back(tree.nodes[i]);
                if (tree.is_tree() && tree.nodes.size() == static_cast<std::size_t>(n - 2) && leaves == ears &&
                    branching == internal) {
                    ++tree_ok;
                }

                const Triangulation r = rotate(t, 1);
                const Triangulation f = reflect(t);
                rotated.insert(r);
                reflected.insert(f);
                if (everything.count(r) && everything.count(f) && ear_count(r) == static_cast<int>(ears.size()) &&
                    ear_count(f) == static_cast<int>(ears.size())) {
                    ++action_ok;
                }
            }
            const std::string size = "triangulations=" + std::to_string(all.size());
            checks.equal("ears-internal", n, size, all.size(), ears_ok);
            checks.equal("dual-tree", n, size, all.size(), tree_ok);
            const bool bijective = rotated == everything && reflected == everything;
            checks.equal("group-action", n, size + ";bijective=" + (bijective ? "yes" : "no"), all.size(),
                         bijective ? action_ok : 0);
        });
    }
    for (int n = 4; n <= std::min(hi, 10); ++n) {
        checks.guarded("canonical-orbit", n, [&] {
            std::size_t ok = 0;
            std::size_t total = 0;
            for_each_triangulation(n, [&](const Triangulation& t) {
                ++total;
                const Triangulation c = canonical_form(t);
                bool good = canonical_form(c) == c;
                for (int s = 0; s < n && good; ++s) {
                    good = canonical_form(apply_dihedral(t, s, false)) == c &&
                           canonical_form(apply_dihedral(t, s, true)) == c;
                }
                if (good) ++ok;
            });
            checks.equal("canonical-orbit", n, "triangulations=" + std::to_string(total), total, ok);
        });
    }
}

// ---- census --------------------------------------------------------------

void suite_census(const Range& range, Checks& checks) {
    for (int n = 4; n <= range.hi(SuiteScale::Single); ++n) {
        checks.guarded("hurtado-noy-census", n, [&] {
            checks.equal("hurtado-noy-census", n, "k=2.." + std::to_string(n / 2),
                         census_string(ear_census(n, CensusMethod::Formula)),
                         census_string(ear_census(n, CensusMethod::Brute, 1)));
        });
    }
    for (int n = 4; n <= range.hi(SuiteScale::Formula); ++n) {
        checks.guarded("hurtado-noy-sum", n, [&] {
            checks.equal("hurtado-noy-sum", n, "k=2.." + std::to_string(n / 2), catalan(n - 2),
                         ear_census(n, CensusMethod::Formula).total());
        });
    }
}

// ---- symmetry ------------------------------------------------------------

void suite_symmetry(const Range& range, Checks& checks) {
    const int hi = range.hi(SuiteScale::Single);
    if (hi >= 4) {
        checks.guarded("sym2-small", 4, [&] {
            checks.equal("sym2-small", 4, "ears=2;method=orbit", ExactCount(1), symmetry_classes_orbit(4, 2, 1));
        });
    }
    for (int n = 5; n <= hi; ++n) {
        checks.guarded("sym-orbit", n, [&] {
            const auto orbits = symmetry_orbit_census(n, 1);
            auto at = [&](int k) { return orbits.count(k) ? orbits.at(k) : ExactCount(0); };
            checks.equal("sym2-orbit", n, "ears=2", symmetry_classes_2ear(n), at(2));
            if (n >= 6) checks.equal("sym3-orbit", n, "ears=3", symmetry_classes_3ear(n), at(3));
            if (n == 6) checks.equal("sym-hexagon", n, "ears=all", ExactCount(3), at(0));
        });
    }
    for (int n = 5; n <= hi; ++n) {
        checks.guarded("bij-class-level", n, [&] {
            std::size_t total = 0;
            std::size_t ok = 0;
            for_each_triangulation(n, [&](const Triangulation& t) {
                if (ear_count(t) != 2) return;
                ++total;
                const auto cls = class_of(string_to_composition(two_eared_to_string(t)));
                bool good = canonical_form(string_to_two_eared(two_eared_to_string(t))) == canonical_form(t);
                for (int s = 0; s < n && good; ++s) {
                    for (bool r : {false, true}) {
                        const Composition c = string_to_composition(two_eared_to_string(apply_dihedral(t, s, r)));
                        good = good && std::binary_search(cls.begin(), cls.end(), c);
                    }
                }
                if (good) ++ok;
            });
            checks.equal("bij-class-level", n, "two-eared=" + std::to_string(total), total, ok);
        });
    }
    const int hi_f = range.hi(SuiteScale::Formula);
    for (int n = 6; n <= hi_f; ++n) {
        checks.guarded("sym3-integral", n, [&] {
            const ExactCount v = symmetry_classes_3ear(n);
            checks.equal("sym3-integral", n, "value=" + to_string(v), std::string("integral"),
                         std::string(v >= 0 ? "integral" : "negative"));
        });
    }
}

// ---- compositions --------------------------------------------------------

void suite_compositions(const Range& range, Checks& checks) {
    const int hi_f = range.hi(SuiteScale::Formula);
    const int m_hi = std::min(hi_f, kCompositionEnumerationCap);
    for (int m = 1; m <= m_hi; ++m) {
        const std::string pm = "m=" + std::to_string(m);
        checks.guarded("comp-involutions", -1, [&] {
            std::size_t total = 0;
            std::size_t ok = 0;
            ExactCount inverse_class_sizes_times_4 = 0;
            for_each_composition(m, [&](const Composition& c) {
                ++total;
                const bool good = conjugate(conjugate(c)) == c && reverse(reverse(c)) == c &&
                                  conjugate(reverse(c)) == reverse(conjugate(c)) &&
                                  from_barset(to_barset(c)) == c;
                if (good) ++ok;
                inverse_class_sizes_times_4 += 4 / static_cast<int>(class_of(c).size());
            });
            checks.equal("comp-involutions", -1, pm, total, ok);
            checks.equal("comp-class-sizes", -1, pm, count_classes(m, ClassCountMethod::Direct) * 4,
                         inverse_class_sizes_times_4);
        });
        checks.guarded("comp-fixed", -1, [&] {
            checks.equal("fixed-reversal", -1, pm, count_fixed_direct(m, FixedOp::Reversal),
                         count_fixed(m, FixedOp::Reversal));
            checks.equal("fixed-conjugation", -1, pm, count_fixed_direct(m, FixedOp::Conjugation),
                         count_fixed(m, FixedOp::Conjugation));
            checks.equal("fixed-conj-rev", -1, pm, count_fixed_direct(m, FixedOp::ConjRev),
                         count_fixed(m, FixedOp::ConjRev));
        });
        checks.guarded("comp-classes", -1, [&] {
            const ExactCount direct = count_classes(m, ClassCountMethod::Direct);
            checks.equal("classes-burnside", -1, pm, direct, count_classes(m, ClassCountMethod::Burnside));
            if (m >= 2) checks.equal("classes-closed", -1, pm, direct, count_classes(m, ClassCountMethod::Closed));
        });
    }
    for (int n = 5; n <= std::min(hi_f, kCompositionEnumerationCap + 3); ++n) {
        checks.guarded("sym2-compositions", n, [&] {
            checks.equal("sym2-compositions", n, "m=" + std::to_string(n - 3),
                         count_classes(n - 3, ClassCountMethod::Direct), symmetry_classes_2ear(n));
        });
    }
    for (int n = 5; n <= std::min(hi_f, 16); ++n) {
        checks.guarded("pointing-roundtrip", n, [&] {
            std::size_t total = 0;
            std::size_t ok = 0;
            for_each_composition(n - 3, [&](const Composition& c) {
                ++total;
                const PointingString s = composition_to_string(c, n);
                const Triangulation t = string_to_two_eared(s);
                if (is_triangulation(n, t.diagonals()) && ear_count(t) == 2 && two_eared_to_string(t) == s &&
                    string_to_composition(s) == c) {
                    ++ok;
                }
            });
            checks.equal("pointing-roundtrip", n, "strings=" + std::to_string(total), total, ok);
        });
    }
}

// ---- disjoint-2ear -------------------------------------------------------

void suite_disjoint_2ear(const Range& range, Checks& checks) {
    const int hi = range.hi(SuiteScale::Single);
    for (int n = 4; n <= hi; ++n) {
        checks.guarded("disj-2ear-all", n, [&] {
            const ExactCount expected = disj_2ear_formula(n);
            std::size_t total = 0;
            std::size_t ok = 0;
            std::string witness;
            for_each_triangulation(n, [&](const Triangulation& t) {
                if (ear_count(t) != 2) return;
                ++total;
                const ExactCount got = disj_count(t);
                if (got == expected) {
                    ++ok;
                } else if (witness.empty()) {
                    witness = format_triangulation(t) + "->" + to_string(got);
                }
            });
            CheckResult r{ok == total ? CheckStatus::Pass : CheckStatus::Fail, "disj-2ear-all", n,
                          "two-eared=" + std::to_string(total), to_string(expected),
                          ok == total ? to_string(expected) : witness};
            checks.add(r);
        });
    }
    for (int n = 4; n <= std::min(hi, 10); ++n) {
        checks.guarded("arrow-characterization", n, [&] {
            const Triangulation a = arrow(n);
            std::size_t total = 0;
            std::size_t ok = 0;
            for_each_triangulation(n, [&](const Triangulation& t) {
                ++total;
                if (are_disjoint(a, t) == t.contains(Diagonal{0, 2})) ++ok;
            });
            checks.equal("arrow-characterization", n, "triangulations=" + std::to_string(total), total, ok);
            checks.equal("avoid-oracle", n, "T=arrow", disj_count_by_enumeration(a), disj_count(a));
            checks.equal("avoid-oracle", n, "T=snake", disj_count_by_enumeration(snake(n)), disj_count(snake(n)));
        });
    }
}

// ---- series --------------------------------------------------------------

void suite_series(const Range& range, Checks& checks) {
    const int hi = std::min(range.hi(SuiteScale::Formula), kInclusionExclusionCap);
    for (int n = 4; n <= hi; ++n) {
        checks.guarded("inclusion-exclusion", n, [&] {
            checks.equal("inclusion-exclusion", n, "compositions-of=" + std::to_string(n - 2), catalan(n - 3),
                         disj_inclusion_exclusion(n));
        });
    }
    checks.guarded("series-coefficients", -1, [&] {
        const auto coeffs = disj_series_coefficients(kSeriesOrder);
        std::string expected;
        std::string got;
        for (int k = 0; k <= kSeriesOrder; ++k) {
            expected += (k ? "," : "") + to_string(catalan(k));
            got += (k ? "," : "") + to_string(coeffs[k]);
        }
        checks.equal("series-coefficients", -1, "order=" + std::to_string(kSeriesOrder), expected, got);
    });
}

// ---- m-forb --------------------------------------------------------------

void suite_m_forb(const Range& range, Checks& checks) {
    for (int n = 4; n <= range.hi(SuiteScale::Single); ++n) {
        checks.guarded("m-forb", n, [&] {
            std::size_t total = 0;
            std::size_t ok = 0;
            std::string witness;
            for (int m = 0; m <= n - 3; ++m) {
                const ExactCount formula = m_forb_formula(n, m);
                for (int a = 0; a < n; ++a) {
                    ++total;
                    const ExactCount brute = count_avoiding(n, m_forb_diagonals(n, m, a));
                    if (brute == formula) {
                        ++ok;
                    } else if (witness.empty()) {
                        witness = "m=" + std::to_string(m) + ",a=" + std::to_string(a) + "->" + to_string(brute);
                    }
                }
            }
            checks.add(CheckResult{ok == total ? CheckStatus::Pass : CheckStatus::Fail, "m-forb", n,
                                   "m=0.." + std::to_string(n - 3) + ";apex=all", std::to_string(total),
                                   ok == total ? std::to_string(ok) : witness});
            checks.equal("m-forb-zero", n, "m=0", catalan(n - 2), m_forb_formula(n, 0));
        });
    }
}

// ---- pqr -----------------------------------------------------------------

std::vector<EarType> ordered_types(int n) {
    std::vector<EarType> out;
    for (int p = 1; p <= n - 5; ++p) {
        for (int q = 1; p + q <= n - 4; ++q) out.push_back(EarType{p, q, n - 3 - p - q});
    }
    return out;
}

void suite_pqr(const Range& range, Checks& checks) {
    const int hi = range.hi(SuiteScale::Single);
    std::size_t printed_total = 0;
    std::size_t printed_mismatch = 0;
    std::optional<CheckResult> witness;
    for (int n = 6; n <= hi; ++n) {
        checks.guarded("pqr", n, [&] {
            const auto types = ordered_types(n);
            std::size_t cases_ok = 0;
            std::size_t perm_ok = 0;
            std::size_t shifted_ok = 0;
            std::size_t roundtrip_ok = 0;
            for (const EarType& t : types) {
                const Triangulation rep = three_ear_rep(n, t);
                const ExactCount brute = disj_count(rep);
                const ExactCount cases = disj_3ear_cases(n, t);
                if (cases == brute) ++cases_ok;
                if (disj_3ear_shifted(n, t) == cases) ++shifted_ok;
                if (three_ear_type(rep) == t.sorted()) ++roundtrip_ok;
                std::array<int, 3> v{t.p, t.q, t.r};
                std::sort(v.begin(), v.end());
                bool invariant = true;
                do {
                    invariant = invariant && disj_3ear_cases(n, EarType{v[0], v[1], v[2]}) == cases;
                } while (std::next_permutation(v.begin(), v.end()));
                if (invariant) ++perm_ok;

                ++printed_total;
                const ExactCount printed = disj_3ear_printed(n, t);
                if (printed != brute) {
                    ++printed_mismatch;
                    if (!witness) {
                        witness = CheckResult{CheckStatus::Erratum, "pqr-printed", n, "type=" + format_ear_type(t),
                                              to_string(brute), to_string(printed)};
                    }
                }
            }
            const std::string params = "types=" + std::to_string(types.size());
            checks.equal("pqr-cases", n, params, types.size(), cases_ok);
            checks.equal("pqr-permutation", n, params, types.size(), perm_ok);
            checks.equal("pqr-shifted", n, params, types.size(), shifted_ok);
            checks.equal("pqr-type-roundtrip", n, params, types.size(), roundtrip_ok);

            // Every 3-eared triangulation, not just the representatives.
            std::size_t three_eared = 0;
            std::size_t same_gen_ok = 0;
            for_each_triangulation(n, [&](const Triangulation& t) {
                if (ear_count(t) != 3) return;
                ++three_eared;
                if (disj_count(t) == disj_3ear_cases(n, three_ear_type(t))) ++same_gen_ok;
            });
            checks.equal("pqr-all-3ear", n, "three-eared=" + std::to_string(three_eared), three_eared, same_gen_ok);
        });
    }
    for (int n = 5; n <= range.hi(SuiteScale::Formula); ++n) {
        checks.guarded("pqr-degenerate", n, [&] {
            std::size_t ok = 0;
            for (int p = 0; p <= n - 3; ++p) {
                if (disj_3ear_shifted(n, EarType{p, n - 3 - p, 0}) == catalan(n - 3)) ++ok;
            }
            checks.equal("pqr-degenerate", n, "p=0.." + std::to_string(n - 3), static_cast<std::size_t>(n - 2), ok);
        });
    }
    if (witness) {
        witness->params += ";mismatches=" + std::to_string(printed_mismatch) + "/" + std::to_string(printed_total);
        checks.add(*witness);
    } else if (printed_total > 0) {
        checks.add(CheckResult{CheckStatus::Pass, "pqr-printed", -1, "mismatches=0/" + std::to_string(printed_total),
                               "0", "0"});
    }
}

// ---- parallel ------------------------------------------------------------

void suite_parallel(const Range& range, Checks& checks) {
    const int hi = range.hi(SuiteScale::Single);
    for (int n = 4; n <= hi; ++n) {
        checks.guarded("snake-parallel", n, [&] {
            const Triangulation s = snake(n);
            checks.equal("snake-parallel", n, "residues={1,2}", catalan(n - 3), count_avoiding_parallel(n, {1, 2}));
            checks.equal("snake-disj", n, "T=snake", catalan(n - 3), disj_count(s));
            checks.equal("snake-residues", n, "residues={1,2}", format_triangulation(s),
                         format_triangulation(Triangulation(n, parallel_class_diagonals(n, {1, 2}))));
            checks.equal("snake-ears", n, "-", 2, ear_count(s));
        });
    }
    for (int n = 6; n <= hi; n += 2) {
        checks.guarded("single-residue", n, [&] {
            checks.equal("single-residue", n, "residues={1}", ExactCount(2 * catalan(n - 3)),
                         count_avoiding_parallel(n, {1}));
        });
    }
}

// ---- same-gen ------------------------------------------------------------

void suite_same_gen(const Range& range, Checks& checks) {
    for (int n = 4; n <= range.hi(SuiteScale::Pairwise); ++n) {
        checks.guarded("same-gen", n, [&] {
            const SignatureReport report = signature_invariance_check(n, 1);
            std::string got = "constant";
            if (report.counterexample) {
                got = "differs:" + format_triangulation(report.counterexample->first) + "|" +
                      format_triangulation(report.counterexample->second);
            } else if (report.oracle_mismatch) {
                got = "oracle-mismatch:" + format_triangulation(*report.oracle_mismatch);
            }
            checks.equal("same-gen", n, "groups=" + std::to_string(report.groups.size()), std::string("constant"), got);
        });
    }
}

using SuiteFn = void (*)(const Range&, Checks&);

struct SuiteEntry {
    SuiteInfo info;
    SuiteFn run;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries{
        {{"core", SuiteScale::Single, "enumeration totals, ear/internal balance, dual tree, dihedral action"}, suite_core},
        {{"census", SuiteScale::Single, "ear-count formula against brute-force census"}, suite_census},
        {{"symmetry", SuiteScale::Single, "2- and 3-eared class formulas against orbit counts"}, suite_symmetry},
        {{"compositions", SuiteScale::Formula, "conjugation/reversal fixed points and class counts"}, suite_compositions},
        {{"disjoint-2ear", SuiteScale::Single, "disjoint count C_{n-3} for every 2-eared triangulation"}, suite_disjoint_2ear},
        {{"series", SuiteScale::Formula, "inclusion-exclusion and generating-function identities"}, suite_series},
        {{"m-forb", SuiteScale::Single, "fan-avoidance formula at every apex"}, suite_m_forb},
        {{"pqr", SuiteScale::Single, "3-eared disjoint counts by branch type"}, suite_pqr},
        {{"parallel", SuiteScale::Single, "parallel-class avoidance, snake and side-parallel counts"}, suite_parallel},
        {{"same-gen", SuiteScale::Pairwise, "disjoint count depends only on internal triangles"}, suite_same_gen},
    };
    return entries;
}

std::string format_seconds(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s;
    return os.str();
}

}  // namespace

std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Erratum: return "ERRATUM";
    }
    return "FAIL";
}

CheckStatus parse_status(std::string_view text) {
    if (text == "PASS") return CheckStatus::Pass;
    if (text == "FAIL") return CheckStatus::Fail;
    if (text == "ERRATUM") return CheckStatus::Erratum;
    throw InputError("unknown check status '" + std::string(text) + "'");
}

std::size_t RunReport::count(CheckStatus s) const {
    std::size_t c = 0;
    for (const auto& suite : suites) {
        c += static_cast<std::size_t>(
            std::count_if(suite.results.begin(), suite.results.end(), [s](const CheckResult& r) { return r.status == s; }));
    }
    return c;
}

int RunReport::exit_code() const { return count(CheckStatus::Fail) == 0 ? 0 : 2; }

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> catalog = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return catalog;
}

int default_max_n(SuiteScale scale) {
    switch (scale) {
        case SuiteScale::Pairwise: return 10;
        case SuiteScale::Single: return 12;
        case SuiteScale::Formula: return 18;
    }
    return 10;
}

int feasible_max_n(SuiteScale scale) {
    switch (scale) {
        case SuiteScale::Pairwise: return 11;
        case SuiteScale::Single: return 14;
        case SuiteScale::Formula: return 30;
    }
    return 10;
}

RunReport run_verify(const VerifyOptions& options) {
    std::vector<const SuiteEntry*> selected;
    for (const auto& name : options.suites) {
        const auto it = std::find_if(registry().begin(), registry().end(),
                                     [&](const SuiteEntry& e) { return e.info.name == name; });
        if (it == registry().end()) throw InputError("unknown verification suite '" + name + "'");
    }
    for (const auto& e : registry()) {
        if (options.suites.empty() ||
            std::find(options.suites.begin(), options.suites.end(), e.info.name) != options.suites.end()) {
            selected.push_back(&e);
        }
    }
    if (options.max_n && *options.max_n < 3) throw InputError("--max-n must be >= 3");

    const Range range{options.max_n};
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.max_n = options.max_n;
    report.timing = options.timing;
    report.suites = parallel_map(selected.size(), options.threads, [&](std::size_t i) {
        const auto suite_start = std::chrono::steady_clock::now();
        SuiteReport suite;
        suite.suite = selected[i]->info.name;
        Checks checks(suite.results);
        selected[i]->run(range, checks);
        if (options.timing) {
            suite.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
        }
        return suite;
    });
    if (options.timing) {
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

std::string format_report_text(const RunReport& report) {
    std::ostringstream os;
    for (const auto& suite : report.suites) {
        for (const auto& r : suite.results) {
            os << status_name(r.status) << "  " << r.id << "  n=" << (r.n < 0 ? std::string("-") : std::to_string(r.n))
               << " params=" << r.params << " expected=" << r.expected << " got=" << r.got << '\n';
        }
        if (report.timing) os << "TIME  " << suite.suite << "  seconds=" << format_seconds(suite.seconds) << '\n';
    }
    os << "SUMMARY  pass=" << report.count(CheckStatus::Pass) << " fail=" << report.count(CheckStatus::Fail)
       << " erratum=" << report.count(CheckStatus::Erratum);
    if (report.timing) os << " seconds=" << format_seconds(report.seconds);
    os << '\n';
    return os.str();
}

nlohmann::json report_to_json(const RunReport& report) {
    nlohmann::json j;
    j["max_n"] = report.max_n ? nlohmann::json(*report.max_n) : nlohmann::json(nullptr);
    j["suites"] = nlohmann::json::array();
    for (const auto& suite : report.suites) {
        nlohmann::json s;
        s["suite"] = suite.suite;
        s["results"] = nlohmann::json::array();
        for (const auto& r : suite.results) {
            s["results"].push_back({{"status", status_name(r.status)},
                                    {"id", r.id},
                                    {"n", r.n < 0 ? nlohmann::json(nullptr) : nlohmann::json(r.n)},
                                    {"params", r.params},
                                    {"expected", r.expected},
                                    {"got", r.got}});
        }
        if (report.timing) s["seconds"] = suite.seconds;
        j["suites"].push_back(std::move(s));
    }
    j["summary"] = {{"pass", report.count(CheckStatus::Pass)},
                    {"fail", report.count(CheckStatus::Fail)},
                    {"erratum", report.count(CheckStatus::Erratum)}};
    if (report.timing) j["seconds"] = report.seconds;
    return j;
}

RunReport report_from_json(const nlohmann::json& j) try {
    RunReport report;
    if (!j.at("max_n").is_null()) report.max_n = j.at("max_n").get<int>();
    report.timing = j.contains("seconds");
    if (report.timing) report.seconds = j.at("seconds").get<double>();
    for (const auto& s : j.at("suites")) {
        SuiteReport suite;
        suite.suite = s.at("suite").get<std::string>();
        if (s.contains("seconds")) suite.seconds = s.at("seconds").get<double>();
        for (const auto& r : s.at("results")) {
            suite.results.push_back(CheckResult{parse_status(r.at("status").get<std::string>()),
                                                r.at("id").get<std::string>(),
                                                r.at("n").is_null() ? -1 : r.at("n").get<int>(),
                                                r.at("params").get<std::string>(),
                                                r.at("expected").get<std::string>(),
                                                r.at("got").get<std::string>()});
        }
        report.suites.push_back(std::move(suite));
    }
    return report;
} catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
}

}  // namespace fewears
