#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "frob/instance.hpp"
#include "frob/numeric.hpp"

namespace frob {

/// Representation counts d(n;A) for n = 0..horizon, extendable on demand.
///
/// Single writer: extending the horizon appends only; completed entries are
/// never moved or rewritten (deque storage), so references from count() stay
/// valid and may be read concurrently as long as no reader triggers an
/// extension.
class DenumerantTable {
public:
    explicit DenumerantTable(Instance instance);

    const Instance& instance() const { return instance_; }
    std::uint64_t horizon() const { return stages_.back().size() - 1; }

    /// d(n;A): number of nonnegative solutions of a1*x1+...+ak*xk = n.
    const ZZ& count(std::uint64_t n);

private:
    void extend_to(std::uint64_t n);

    Instance instance_;
    // stages_[j][n] counts representations of n by the first j+1 generators;
    // keeping every stage makes horizon growth a pure left-to-right append.
    std::vector<std::deque<ZZ>> stages_;
};

/// One-shot d(n;A).
ZZ denumerant(std::uint64_t n, const Instance& A);

/// All n >= 0 with d(n;A) <= p, ascending. The scan stops once a1
/// consecutive values have count >= p+1: counts are nondecreasing along each
/// residue class mod a1, so no larger member can exist.
std::vector<ZZ> nonrep_set_p(DenumerantTable& table, std::uint64_t p);
std::vector<ZZ> nonrep_set_p(const Instance& A, std::uint64_t p);

// max / cardinality / sum of nonrep_set_p; EmptySetError when no n
// qualifies (possible only when 1 is a generator and p = 0).
ZZ oracle_gp(DenumerantTable& table, std::uint64_t p);
ZZ oracle_np(DenumerantTable& table, std::uint64_t p);
ZZ oracle_sp(DenumerantTable& table, std::uint64_t p);
ZZ oracle_gp(const Instance& A, std::uint64_t p);
ZZ oracle_np(const Instance& A, std::uint64_t p);
ZZ oracle_sp(const Instance& A, std::uint64_t p);

/// Sum of n^mu over nonrep_set_p; mu >= 1. EmptySetError on an empty set.
ZZ oracle_power_sum(DenumerantTable& table, std::uint64_t p, unsigned mu);
ZZ oracle_power_sum(const Instance& A, std::uint64_t p, unsigned mu);

/// Sum of lambda^n * n^mu over nonrep_set_p by direct summation;
/// lambda outside {0,1}, mu >= 1.
ZZ oracle_weighted_sum(DenumerantTable& table, std::uint64_t p, long lambda,
                       unsigned mu);
ZZ oracle_weighted_sum(const Instance& A, std::uint64_t p, long lambda,
                       unsigned mu);

/// Largest n with exactly p representations, or nullopt if no such n exists.
std::optional<ZZ> g_star(DenumerantTable& table, std::uint64_t p);
std::optional<ZZ> g_star(const Instance& A, std::uint64_t p);

}  // namespace frob
