// End-to-end acceptance checks for the rank-4 classification.  Each check
// prints a single pass/fail line; the exit status is the number of failures.

#include "latref/edge_bounds.hpp"
#include "latref/local.hpp"
#include "latref/pipeline.hpp"
#include "latref/vinberg.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace latref;

namespace {

int failures = 0;

class Criterion {
  public:
    explicit Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) problems_.push_back(what);
    }

    ~Criterion() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (problems_.empty()) {
            std::printf("criterion %d (%s): PASS  [%.1fs]\n", number_, title_.c_str(), secs);
        } else {
            ++failures;
            std::printf("criterion %d (%s): FAIL  [%.1fs]\n", number_, title_.c_str(), secs);
            for (const auto& p : problems_) std::printf("    - %s\n", p.c_str());
        }
        std::fflush(stdout);
    }

  private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> problems_;
};

// isomorphism test with the taller search box as a fallback
bool certified_isomorphic(const QuadLattice& a, const QuadLattice& b) {
    IsomVerdict v = z_isomorphic(a, b);
    if (std::holds_alternative<IsomUnknown>(v)) v = z_isomorphic(a, b, 25);
    return std::holds_alternative<IsomYes>(v);
}

// match each lattice on the left to the unique isomorphic target; returns the
// index vector or an empty vector when the matching is not a bijection
std::vector<int> match_to_targets(const std::vector<QuadLattice>& left,
                                  const std::vector<QuadLattice>& targets) {
    std::vector<int> assign(left.size(), -1);
    std::vector<bool> used(targets.size(), false);
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (used[t]) continue;
            if (certified_isomorphic(left[i], targets[t])) {
                assign[i] = (int)t;
                used[t] = true;
                break;
            }
        }
        if (assign[i] < 0) return {};
    }
    return assign;
}

void criterion_1_bounds_table() {
    Criterion c(1, "width bound table");
    auto start = std::chrono::steady_clock::now();
    auto table = bounds_table();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    c.require(table.size() == 44, "expected 44 rows, got " + std::to_string(table.size()));
    double best = 0;
    AngleSet argmax{};
    bool found_ref = false;
    for (const auto& row : table) {
        if (row.t > best) {
            best = row.t;
            argmax = row.angles;
        }
        c.require(row.t < 7, "raw bound >= 7 encountered");
        if (row.angles == AngleSet{{6, 2, 2, 2, 2}}) {
            found_ref = true;
            c.require(std::abs(row.t - 2.87) <= 0.02,
                      "bound at (pi/6, pi/2, pi/2, pi/2, pi/2) = " + std::to_string(row.t));
        }
    }
    c.require(found_ref, "row (pi/6, pi/2, pi/2, pi/2, pi/2) missing");
    c.require(std::abs(best - 4.14) <= 0.02, "max bound = " + std::to_string(best));
    c.require(argmax == AngleSet{{4, 2, 3, 3, 2}},
              "max not attained at (pi/4, pi/2, pi/3, pi/3, pi/2)");
    c.require(secs < 1.0, "table took " + std::to_string(secs) + "s (limit 1s)");
}

void criterion_2_classes(const ClassificationReport& rep, double classify_secs) {
    auto targets = fixtures::all_candidates();
    Criterion c(2, "anisotropic classes match the seven candidates");
    c.require(rep.classes.size() == 7,
              "expected 7 classes, got " + std::to_string(rep.classes.size()));
    std::vector<QuadLattice> reps;
    for (const auto& cls : rep.classes) reps.push_back(cls.lattice);
    c.require(!match_to_targets(reps, targets).empty(),
              "no certified bijection between the classes and L(1)..L(7)");
    c.require(classify_secs < 300, "pipeline took " + std::to_string(classify_secs) + "s");
}

void criterion_6_verdicts(const ClassificationReport& rep, double classify_secs) {
    auto targets = fixtures::all_candidates();
    {
        Criterion c(6, "end-to-end classification verdicts");
        c.require(rep.candidates.size() == 7,
                  "expected 7 candidates, got " + std::to_string(rep.candidates.size()));
        std::vector<QuadLattice> cands;
        for (const auto& cand : rep.candidates) cands.push_back(cand.lattice);
        auto assign = match_to_targets(cands, targets);
        if (assign.empty()) {
            c.require(false, "candidates do not match L(1)..L(7)");
            return;
        }
        for (std::size_t i = 0; i < cands.size(); ++i) {
            int label = assign[i] + 1;  // 1-based L(k)
            Reflectivity12 v = rep.verdicts[i].verdict;
            switch (label) {
                case 1:
                case 2:
                case 6:
                case 7:
                    c.require(v == Reflectivity12::Reflective12,
                              "L(" + std::to_string(label) + ") not Reflective12");
                    break;
                case 3:
                case 5:
                    c.require(v == Reflectivity12::NotReflective12,
                              "L(" + std::to_string(label) + ") not NotReflective12");
                    break;
                case 4:
                    c.require(v == Reflectivity12::Undecided ||
                                  v == Reflectivity12::NotReflective12,
                              "L(4) reported Reflective12");
                    break;
            }
        }
        c.require(classify_secs < 900, "classification took " + std::to_string(classify_secs) + "s");
    }
}

void criterion_3_saturation() {
    Criterion c(3, "overlattice saturation");
    // L(6): the proper extensions all land on L(1); likewise L(7) on L(2)
    struct Case {
        QuadLattice base, target, other;
        const char* name;
    } cases[] = {{fixtures::l6(), fixtures::l1(), fixtures::l2(), "L(6)"},
                 {fixtures::l7(), fixtures::l2(), fixtures::l3(), "L(7)"}};
    for (const auto& cs : cases) {
        auto exts = overlattices(cs.base, fixtures::basis_roots(cs.base));
        std::size_t proper = 0;
        for (const auto& ext : exts) {
            if (ext.index == 1) continue;
            ++proper;
            QuadLattice m(ext.gram);
            c.require(certified_isomorphic(m, cs.target),
                      std::string(cs.name) + ": proper extension not isomorphic to the target");
            c.require(!certified_isomorphic(m, cs.other),
                      std::string(cs.name) + ": extension matches the wrong candidate");
        }
        c.require(proper >= 1, std::string(cs.name) + " has no proper extension");
    }
    // L(1)..L(5) are maximal
    int k = 1;
    for (const auto& l :
         {fixtures::l1(), fixtures::l2(), fixtures::l3(), fixtures::l4(), fixtures::l5()}) {
        auto exts = overlattices(l, fixtures::basis_roots(l));
        c.require(exts.size() == 1 && exts[0].index == 1,
                  "L(" + std::to_string(k) + ") has a proper extension");
        ++k;
    }
}

void criterion_4_vinberg_l3() {
    Criterion c(4, "Vinberg run on L(3)");
    QuadLattice l = fixtures::l3();
    VinbergReport rep = run(l, NormPolicy::all());
    c.require(rep.roots.size() == 7,
              "expected 7 roots, got " + std::to_string(rep.roots.size()));
    c.require(rep.verdict == RunVerdict::Compact, "volume verdict is not Compact");

    std::vector<long> norms;
    for (const auto& k : rep.norms) norms.push_back(k.convert_to<long>());
    std::vector<long> expected_norms{1, 2, 5, 6, 2, 1, 5};
    std::sort(norms.begin(), norms.end());
    std::sort(expected_norms.begin(), expected_norms.end());
    c.require(norms == expected_norms, "root norm multiset differs");

    // Gram matrix of the seven roots, up to simultaneous permutation
    const long expected[7][7] = {{1, -1, 0, 0, 0, -2, -5},  {-1, 2, 0, -3, 0, 0, -5},
                                 {0, 0, 5, 0, -5, -5, -30}, {0, -3, 0, 6, -3, 0, 0},
                                 {0, 0, -5, -3, 2, -1, 0},  {-2, 0, -5, 0, -1, 1, 0},
                                 {-5, -5, -30, 0, 0, 0, 5}};
    bool matched = false;
    if (rep.roots.size() == 7) {
        std::vector<int> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; i < 7 && ok; ++i)
                for (int j = 0; j < 7 && ok; ++j)
                    if (rep.diagram.gram(perm[i], perm[j]) != expected[i][j]) ok = false;
            if (ok) {
                matched = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    c.require(matched, "root Gram matrix differs from the reference up to permutation");

    // the three mirrors of norm > 2 generate an infinite group, witnessed by a
    // dotted (divergent) edge between two of them
    c.require(!bad_group_finite(rep.diagram), "bad subset classified finite");
    auto w = bad_pair_witness(rep.diagram);
    c.require(w.has_value(), "no bad pair reported");
    if (w) {
        auto rel = rep.diagram.relation(w->first, w->second);
        c.require(rel.kind == MirrorRelation::Kind::Divergent, "bad pair edge is not dotted");
    }
}

void criterion_5_vinberg_l5() {
    Criterion c(5, "Vinberg run on L(5)");
    QuadLattice l = fixtures::l5();
    VinbergEngine engine(l, NormPolicy::all(), {8, Rat(1000000)});
    while (engine.next_root() && engine.accepted().size() < 8) {
    }
    const auto& roots = engine.accepted();
    c.require(roots.size() == 8, "engine yielded " + std::to_string(roots.size()) + " roots");
    bool found = false;
    for (std::size_t i = 0; i < roots.size() && !found; ++i)
        for (std::size_t j = i + 1; j < roots.size() && !found; ++j) {
            if (l.norm(roots[i]) != 5 || l.norm(roots[j]) != 5) continue;
            if (abs(l.inner(roots[i], roots[j])) != 70) continue;
            auto rel = mirror_relation(Int(5), Int(5), l.inner(roots[i], roots[j]));
            found = rel.kind == MirrorRelation::Kind::Divergent;
        }
    c.require(found, "no divergent (5,5) pair with |(a,b)| = 70 in the first 8 roots");
    c.require(one_two_reflectivity(l).verdict == Reflectivity12::NotReflective12,
              "verdict is not NotReflective12");
}

void criterion_7_local_arithmetic() {
    Criterion c(7, "local arithmetic against brute-force oracles");
    // Hilbert symbol vs. solvability, all square-class pairs, p <= 50
    for (long p = 2; p <= 50; ++p) {
        bool prime = p > 1;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        for (long a : oracles::square_class_reps(p))
            for (long b : oracles::square_class_reps(p)) {
                int closed = hilbert_symbol(Rat(a), Rat(b), Place::prime(Int(p)));
                if (closed != oracles::hilbert_oracle(a, b, p)) {
                    std::ostringstream os;
                    os << "hilbert symbol mismatch at p=" << p << " a=" << a << " b=" << b;
                    c.require(false, os.str());
                }
            }
    }
    // product formula on 1000 random pairs
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> nd(-60, 60), dd(1, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        int an = nd(rng), bn = nd(rng);
        if (!an || !bn) {
            --trial;
            continue;
        }
        Rat a(an, dd(rng)), b(bn, dd(rng));
        int prod = hilbert_symbol(a, b, Place::real());
        for (const auto& [p, e] : factorize(2 * num(a) * den(a) * num(b) * den(b)))
            prod *= hilbert_symbol(a, b, Place::prime(p));
        if (prod != 1) {
            c.require(false, "product formula violated");
            break;
        }
    }
    // anisotropy vs. bounded isotropic search over every rank-4 diagonal form
    // with entries in [-10, 10] \ {0}
    long mismatches = 0;
    for (long a = -10; a <= 10; ++a) {
        if (!a) continue;
        for (long b = -10; b <= 10; ++b) {
            if (!b) continue;
            for (long cc = -10; cc <= 10; ++cc) {
                if (!cc) continue;
                for (long d = -10; d <= 10; ++d) {
                    if (!d) continue;
                    DiagonalForm f{{Rat(a), Rat(b), Rat(cc), Rat(d)}};
                    bool aniso = is_anisotropic_over_Q(f);
                    bool found = oracles::isotropic_in_box(a, b, cc, d, 25);
                    if (aniso == found) ++mismatches;
                }
            }
        }
    }
    c.require(mismatches == 0,
              "anisotropy disagrees with the search on " + std::to_string(mismatches) + " forms");
}

void criterion_8_engine_invariants() {
    Criterion c(8, "engine invariants");
    auto lattices = fixtures::all_candidates();
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> small(-3, 3), big(-10, 10);

    // reflections: involutive and inner-product preserving, 1000 random cases
    int cases = 0;
    while (cases < 1000) {
        const QuadLattice& l = lattices[rng() % lattices.size()];
        IVec e(4), x(4), y(4);
        for (auto& t : e) t = small(rng);
        Int k = l.norm(e);
        if (k <= 0 || !is_primitive(e) || !is_root(l, e, k)) continue;
        for (auto& t : x) t = big(rng);
        for (auto& t : y) t = big(rng);
        IVec rx = reflect(l, e, x), ry = reflect(l, e, y);
        if (reflect(l, e, rx) != x || l.inner(rx, ry) != l.inner(x, y)) {
            c.require(false, "reflection identity violated");
            break;
        }
        ++cases;
    }

    // accepted roots: monotone priorities and pairwise non-obtuse, all candidates
    for (const auto& l : lattices) {
        VinbergEngine e(l, NormPolicy::all(), {24, Rat(100000)});
        while (e.next_root()) {
        }
        const auto& roots = e.accepted();
        const auto& prios = e.accepted_priorities();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (i > 0 && prios[i - 1] > prios[i]) c.require(false, "priority not monotone");
            for (std::size_t j = 0; j < i; ++j)
                if (l.inner(roots[i], roots[j]) > 0) c.require(false, "obtuse accepted pair");
        }
    }

    // prefix stability under budget doubling
    for (const auto& l : {fixtures::l1(), fixtures::l3(), fixtures::l5()}) {
        auto pull = [&](std::size_t mr, long mp) {
            VinbergEngine e(l, NormPolicy::all(), {mr, Rat(mp)});
            while (e.next_root()) {
            }
            return e.accepted();
        };
        auto small_run = pull(10, 10000);
        auto large_run = pull(20, 20000);
        bool prefix = large_run.size() >= small_run.size() &&
                      std::equal(small_run.begin(), small_run.end(), large_run.begin());
        c.require(prefix, "accepted prefix changed when the budget doubled");
    }
}

}  // namespace

int main() {
    criterion_1_bounds_table();

    auto start = std::chrono::steady_clock::now();
    ClassificationReport rep = classify();
    double classify_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    criterion_2_classes(rep, classify_secs);

    criterion_3_saturation();
    criterion_4_vinberg_l3();
    criterion_5_vinberg_l5();
    criterion_6_verdicts(rep, classify_secs);
    criterion_7_local_arithmetic();
    criterion_8_engine_invariants();

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
