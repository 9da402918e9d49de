#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frob/denumerant.hpp"
#include "frob/instance.hpp"
#include "frob/numeric.hpp"

namespace frob {

/// (x2,x3) coordinates of an element value (a2)*x2 + (a3)*x3, recorded when
/// the set was produced by the closed-form constructor.
struct AperyCoord {
    std::uint64_t x2 = 0;
    std::uint64_t x3 = 0;
    friend bool operator==(const AperyCoord&, const AperyCoord&) = default;
};

/// The p-Apery set of an instance: for each residue class i mod a1, the
/// least element with at least p+1 representations (0 stands in for
/// residue 0 at p = 0). Immutable after construction.
class AperySet {
public:
    AperySet(Instance instance, std::uint64_t p, std::vector<ZZ> elements,
             std::optional<std::vector<AperyCoord>> coords = std::nullopt);

    const Instance& instance() const { return instance_; }
    std::uint64_t level() const { return p_; }

    /// elements()[i] is the class-i member; elements()[i] % a1 == i.
    const std::vector<ZZ>& elements() const { return elements_; }
    const std::optional<std::vector<AperyCoord>>& coords() const {
        return coords_;
    }
    const ZZ& max_element() const;

private:
    Instance instance_;
    std::uint64_t p_;
    std::vector<ZZ> elements_;
    std::optional<std::vector<AperyCoord>> coords_;
};

/// Builds the p-Apery set by ascending scan against the denumerant table.
AperySet apery_set(DenumerantTable& table, std::uint64_t p);
AperySet apery_set(const Instance& A, std::uint64_t p);

/// max element - a1.
ZZ gp_from_apery(const AperySet& S);

/// (sum of elements)/a1 - (a1-1)/2, integrality checked.
ZZ np_from_apery(const AperySet& S);

/// (sum of squares)/(2 a1) - (sum)/2 + (a1^2-1)/12, integrality checked.
ZZ sp_from_apery(const AperySet& S);

/// Sum of n^mu over all n with at most p representations, evaluated from
/// the Apery elements via the Bernoulli-number power-sum identity; mu >= 1.
/// mu = 0 callers want the plain count and are routed to np_from_apery.
ZZ power_sum(const AperySet& S, unsigned mu);

/// Sum of lambda^n * n^mu, evaluated from the Apery elements via the
/// Eulerian-number weighted-sum identity. Requires lambda outside {0,1} and
/// lambda^a1 != 1 (rejects lambda = -1 when a1 is even); mu >= 1.
ZZ weighted_power_sum(const AperySet& S, long lambda, unsigned mu);

enum class QueryKind { gp, np, sp, power_sum, weighted_sum };
enum class Provenance { closed_form, apery, oracle };

const char* to_string(QueryKind k);
const char* to_string(Provenance p);

/// A tagged exact result with an honest record of which path produced it.
struct QueryResult {
    QueryKind kind;
    ZZ value;
    Provenance provenance;
    std::vector<std::uint64_t> generators;
    std::uint64_t p = 0;
    std::optional<unsigned> mu;
    std::optional<long> lambda;
};

}  // namespace frob
