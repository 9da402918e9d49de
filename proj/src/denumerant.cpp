#include "frob/denumerant.hpp"

#include <algorithm>

namespace frob {

namespace {
constexpr std::uint64_t kInitialHorizon = 255;
}

DenumerantTable::DenumerantTable(Instance instance)
    : instance_(std::move(instance)) {
    stages_.resize(instance_.arity());
    for (auto& s : stages_) s.push_back(1);
    extend_to(kInitialHorizon);
}

void DenumerantTable::extend_to(std::uint64_t n) {
    const auto& gens = instance_.generators();
    for (std::uint64_t m = stages_[0].size(); m <= n; ++m) {
        stages_[0].push_back(m % gens[0] == 0 ? 1 : 0);
        for (std::size_t j = 1; j < stages_.size(); ++j) {
            ZZ c = stages_[j - 1][m];
            if (m >= gens[j]) c += stages_[j][m - gens[j]];
            stages_[j].push_back(std::move(c));
        }
    }
}

const ZZ& DenumerantTable::count(std::uint64_t n) {
    if (n >= stages_.back().size())
        extend_to(std::max(n, 2 * horizon()));
    return stages_.back()[n];
}

ZZ denumerant(std::uint64_t n, const Instance& A) {
    DenumerantTable t(A);
    return t.count(n);
}

std::vector<ZZ> nonrep_set_p(DenumerantTable& table, std::uint64_t p) {
    const std::uint64_t a1 = table.instance().least();
    std::vector<ZZ> out;
    std::uint64_t saturated_run = 0;
    for (std::uint64_t n = 0; saturated_run < a1; ++n) {
        if (table.count(n) <= p) {
            out.emplace_back(static_cast<unsigned long>(n));
            saturated_run = 0;
        } else {
            ++saturated_run;
        }
    }
    return out;
}

std::vector<ZZ> nonrep_set_p(const Instance& A, std::uint64_t p) {
    DenumerantTable t(A);
    return nonrep_set_p(t, p);
}

namespace {

std::vector<ZZ> nonempty_set(DenumerantTable& table, std::uint64_t p,
                             const char* what) {
    auto set = nonrep_set_p(table, p);
    if (set.empty())
        throw EmptySetError(std::string(what) + " undefined: no n has d(n;" +
                            table.instance().to_string() +
                            ") <= " + std::to_string(p));
    return set;
}

}  // namespace

ZZ oracle_gp(DenumerantTable& table, std::uint64_t p) {
    return nonempty_set(table, p, "g_p").back();
}

ZZ oracle_np(DenumerantTable& table, std::uint64_t p) {
    return ZZ(static_cast<unsigned long>(nonempty_set(table, p, "n_p").size()));
}

ZZ oracle_sp(DenumerantTable& table, std::uint64_t p) {
    ZZ acc(0);
    for (const ZZ& n : nonempty_set(table, p, "s_p")) acc += n;
    return acc;
}

ZZ oracle_power_sum(DenumerantTable& table, std::uint64_t p, unsigned mu) {
    if (mu == 0) throw DomainError("power sum requires mu >= 1");
    ZZ acc(0);
    for (const ZZ& n : nonempty_set(table, p, "s_p^(mu)"))
        acc += pow_zz(n, mu);
    return acc;
}

ZZ oracle_weighted_sum(DenumerantTable& table, std::uint64_t p, long lambda,
                       unsigned mu) {
    if (lambda == 0 || lambda == 1)
        throw InvalidWeightError("lambda must differ from 0 and 1");
    if (mu == 0) throw DomainError("weighted sum requires mu >= 1");
    ZZ acc(0);
    const ZZ weight(lambda);
    for (const ZZ& n : nonempty_set(table, p, "s_{lambda,p}^(mu)"))
        acc += pow_zz(weight, n.get_ui()) * pow_zz(n, mu);
    return acc;
}

std::optional<ZZ> g_star(DenumerantTable& table, std::uint64_t p) {
    // Every n above g_p has more than p representations, so the search for
    // d(n) = p is confined to [0, g_p].
    auto set = nonrep_set_p(table, p);
    if (set.empty()) return std::nullopt;
    for (std::uint64_t n = set.back().get_ui();; --n) {
        if (table.count(n) == p) return ZZ(static_cast<unsigned long>(n));
        if (n == 0) break;
    }
    return std::nullopt;
}

ZZ oracle_gp(const Instance& A, std::uint64_t p) {
    DenumerantTable t(A);
    return oracle_gp(t, p);
}
ZZ oracle_np(const Instance& A, std::uint64_t p) {
    DenumerantTable t(A);
    return oracle_np(t, p);
}
ZZ oracle_sp(const Instance& A, std::uint64_t p) {
    DenumerantTable t(A);
    return oracle_sp(t, p);
}
ZZ oracle_power_sum(const Instance& A, std::uint64_t p, unsigned mu) {
    DenumerantTable t(A);
    return oracle_power_sum(t, p, mu);
}
ZZ oracle_weighted_sum(const Instance& A, std::uint64_t p, long lambda,
                       unsigned mu) {
    DenumerantTable t(A);
    return oracle_weighted_sum(t, p, lambda, mu);
}
std::optional<ZZ> g_star(const Instance& A, std::uint64_t p) {
    DenumerantTable t(A);
    return g_star(t, p);
}

}  // namespace frob
