#pragma once

#include "latref/coxeter.hpp"

#include <memory>
#include <optional>

namespace latref {

// Which root norms the engine may reflect in.
struct NormPolicy {
    bool all_divisors = false;
    std::vector<Int> explicit_set;  // used when all_divisors is false

    static NormPolicy all() { return {true, {}}; }
    static NormPolicy only(std::vector<Int> ks) { return {false, std::move(ks)}; }

    // concrete norm list for a given lattice (divisors of 2 * last invariant factor)
    std::vector<Int> resolve(const QuadLattice& l) const;
};

struct VinbergBudget {
    std::size_t max_roots = 64;
    Rat max_priority = 1000000;
};

enum class RunVerdict { Compact, FiniteVolume, BudgetExhausted };

struct VinbergReport {
    IVec basic_point;
    std::vector<IVec> roots;
    std::vector<Int> norms;
    std::vector<Rat> priorities;  // (a, v0)^2 / (a, a), non-decreasing
    CoxeterDiagram diagram;
    RunVerdict verdict;
    bool bad_finite;
    std::optional<std::pair<std::size_t, std::size_t>> bad_witness;  // non-elliptic bad pair
};

IVec choose_basic_point(const QuadLattice& l);

// Simple roots of the finite root system in the orthogonal complement of v0,
// i.e. the walls of the fundamental chamber of the stabilizer of v0.
std::vector<IVec> stabilizer_chamber(const QuadLattice& l, const IVec& v0,
                                     const std::vector<Int>& norms);

// Incremental root acceptor implementing conditions (a,v0) < 0, minimal
// priority, and non-obtuseness against everything accepted so far.
class VinbergEngine {
  public:
    VinbergEngine(QuadLattice l, NormPolicy policy, VinbergBudget budget);

    const QuadLattice& lattice() const { return lattice_; }
    const IVec& basic_point() const { return v0_; }
    const std::vector<IVec>& accepted() const { return accepted_; }
    const std::vector<Int>& accepted_norms() const { return norms_; }
    const std::vector<Rat>& accepted_priorities() const { return priorities_; }

    // next accepted root, or nullopt when the budget is exhausted
    std::optional<IVec> next_root();

    CoxeterDiagram diagram() const;

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    QuadLattice lattice_;
    NormPolicy policy_;
    VinbergBudget budget_;
    IVec v0_;
    std::vector<IVec> accepted_;
    std::vector<Int> norms_;
    std::vector<Rat> priorities_;
};

VinbergReport run(const QuadLattice& l, const NormPolicy& policy, const VinbergBudget& budget = {});

enum class Reflectivity12 { Reflective12, NotReflective12, Undecided };

struct ReflectivityResult {
    Reflectivity12 verdict;
    std::optional<VinbergReport> restricted_run;  // norms {1, 2}
    std::optional<VinbergReport> full_run;        // all divisor norms
    std::optional<std::pair<IVec, IVec>> witness; // offending bad-root pair, if any
};

ReflectivityResult one_two_reflectivity(const QuadLattice& l, const VinbergBudget& budget = {});

}  // namespace latref
