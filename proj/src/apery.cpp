#include "frob/apery.hpp"

#include <utility>

#include "frob/special_numbers.hpp"

namespace frob {

AperySet::AperySet(Instance instance, std::uint64_t p,
                   std::vector<ZZ> elements,
                   std::optional<std::vector<AperyCoord>> coords)
    : instance_(std::move(instance)),
      p_(p),
      elements_(std::move(elements)),
      coords_(std::move(coords)) {
    const std::uint64_t a1 = instance_.least();
    if (elements_.size() != a1)
        throw InternalInconsistencyError(
            "Apery set must have exactly a1 elements");
    for (std::uint64_t i = 0; i < a1; ++i) {
        if (elements_[i] < 0 || elements_[i] % a1 != i)
            throw InternalInconsistencyError(
                "Apery element " + elements_[i].get_str() +
                " is not in residue class " + std::to_string(i));
        if (elements_[i] == 0 && !(p_ == 0 && i == 0))
            throw InternalInconsistencyError(
                "0 is admissible only at level 0, residue 0");
    }
    if (coords_ && coords_->size() != a1)
        throw InternalInconsistencyError(
            "coordinate array must match element array");
}

const ZZ& AperySet::max_element() const {
    const ZZ* best = &elements_.front();
    for (const ZZ& e : elements_)
        if (e > *best) best = &e;
    return *best;
}

AperySet apery_set(DenumerantTable& table, std::uint64_t p) {
    const std::uint64_t a1 = table.instance().least();
    std::vector<ZZ> elements(a1);
    std::vector<bool> found(a1, false);
    std::uint64_t remaining = a1;
    // d(n) -> infinity along every residue class, so the scan terminates.
    for (std::uint64_t n = 0; remaining > 0; ++n) {
        const std::uint64_t r = n % a1;
        if (!found[r] && table.count(n) > p) {
            elements[r] = ZZ(static_cast<unsigned long>(n));
            found[r] = true;
            --remaining;
        }
    }
    return AperySet(table.instance(), p, std::move(elements));
}

AperySet apery_set(const Instance& A, std::uint64_t p) {
    DenumerantTable t(A);
    return apery_set(t, p);
}

ZZ gp_from_apery(const AperySet& S) {
    return S.max_element() - ZZ(static_cast<unsigned long>(S.instance().least()));
}

ZZ np_from_apery(const AperySet& S) {
    const std::uint64_t a1 = S.instance().least();
    ZZ sum(0);
    for (const ZZ& m : S.elements()) sum += m;
    QQ value = make_rational(sum, ZZ(a1)) - make_rational(ZZ(a1 - 1), ZZ(2));
    return to_integer(value);
}

ZZ sp_from_apery(const AperySet& S) {
    const std::uint64_t a1 = S.instance().least();
    ZZ sum(0), sumsq(0);
    for (const ZZ& m : S.elements()) {
        sum += m;
        sumsq += m * m;
    }
    QQ value = make_rational(sumsq, ZZ(2 * a1)) - make_rational(sum, ZZ(2)) +
               make_rational(ZZ(a1) * ZZ(a1) - 1, ZZ(12));
    return to_integer(value);
}

ZZ power_sum(const AperySet& S, unsigned mu) {
    if (mu == 0) return np_from_apery(S);
    const std::uint64_t a1 = S.instance().least();
    const ZZ a1z(static_cast<unsigned long>(a1));

    QQ acc(0);
    for (unsigned kappa = 0; kappa <= mu; ++kappa) {
        QQ b = bernoulli(kappa);
        if (b == 0) continue;
        ZZ elem_pow_sum(0);
        for (const ZZ& m : S.elements())
            elem_pow_sum += pow_zz(m, mu + 1 - kappa);
        QQ coeff = QQ(binomial(mu + 1, kappa)) * b;
        if (kappa == 0)
            coeff *= make_rational(ZZ(1), a1z);
        else
            coeff *= QQ(pow_zz(a1z, kappa - 1));
        acc += coeff * QQ(elem_pow_sum);
    }
    acc /= QQ(ZZ(mu + 1));
    acc += bernoulli(mu + 1) / QQ(ZZ(mu + 1)) * QQ(pow_zz(a1z, mu + 1) - 1);
    return to_integer(acc);
}

ZZ weighted_power_sum(const AperySet& S, long lambda, unsigned mu) {
    const std::uint64_t a1 = S.instance().least();
    if (lambda == 0 || lambda == 1)
        throw InvalidWeightError("lambda must differ from 0 and 1");
    if (lambda == -1 && a1 % 2 == 0)
        throw InvalidWeightError(
            "lambda = -1 with even least generator makes lambda^a1 = 1");
    if (mu == 0) throw DomainError("weighted sum requires mu >= 1");

    const ZZ weight(lambda);
    const ZZ weight_a1 = pow_zz(weight, a1);
    const ZZ neg_a1 = -ZZ(static_cast<unsigned long>(a1));

    QQ acc(0);
    for (unsigned n = 0; n <= mu; ++n) {
        ZZ eulerian_block(0);
        for (unsigned j = 0; j <= n; ++j)
            eulerian_block +=
                eulerian(n, static_cast<long>(n) - static_cast<long>(j)) *
                pow_zz(weight_a1, j);
        ZZ elem_block(0);
        for (const ZZ& m : S.elements()) {
            if (!m.fits_ulong_p())
                throw DomainError("Apery element exceeds weight range");
            // 0^0 = 1 here: the level-0 residue-0 element contributes
            // lambda^0 when mu = n.
            elem_block += pow_zz(m, mu - n) * pow_zz(weight, m.get_ui());
        }
        ZZ num = pow_zz(neg_a1, n) * binomial(mu, n) * eulerian_block *
                 elem_block;
        acc += make_rational(num, pow_zz(weight_a1 - 1, n + 1));
    }

    ZZ tail(0);
    for (unsigned j = 0; j <= mu; ++j)
        tail += eulerian(mu, static_cast<long>(mu) - static_cast<long>(j)) *
                pow_zz(weight, j);
    if (mu % 2 == 0) tail = -tail;  // (-1)^(mu+1)
    acc += make_rational(tail, pow_zz(weight - 1, mu + 1));

    return to_integer(acc);
}

const char* to_string(QueryKind k) {
    switch (k) {
        case QueryKind::gp: return "gp";
        case QueryKind::np: return "np";
        case QueryKind::sp: return "sp";
        case QueryKind::power_sum: return "power";
        case QueryKind::weighted_sum: return "weighted";
    }
    return "?";
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::closed_form: return "closed_form";
        case Provenance::apery: return "apery";
        case Provenance::oracle: return "oracle";
    }
    return "?";
}

}  // namespace frob
