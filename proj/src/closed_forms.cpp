#include "frob/closed_forms.hpp"

#include <cassert>
#include <numeric>

namespace frob {

namespace {

void check_level(const ArithTriple& T, std::uint64_t p) {
    if (p > T.max_level())
        throw OutOfValidatedRangeError(
            "p = " + std::to_string(p) + " exceeds floor(a/2) = " +
            std::to_string(T.max_level()) + " for a = " +
            std::to_string(T.a()) +
            "; use the apery or oracle path beyond this level");
}

ZZ exact_quotient(const ZZ& num, unsigned long den, const char* what) {
    ZZ q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den);
    if (r != 0)
        throw InternalInconsistencyError(std::string(what) +
                                         " is not divisible by " +
                                         std::to_string(den));
    return q;
}

}  // namespace

ArithTriple::ArithTriple(std::uint64_t a, std::uint64_t d) : a_(a), d_(d) {
    if (a < 3) throw DomainError("arithmetic triple requires a >= 3");
    if (d == 0) throw DomainError("arithmetic triple requires d > 0");
    if (std::gcd(a, d) != 1)
        throw NotCoprimeError("gcd(a,d) = " + std::to_string(std::gcd(a, d)) +
                              " for a = " + std::to_string(a) +
                              ", d = " + std::to_string(d));
}

Instance ArithTriple::instance() const {
    return Instance({a_, a_ + d_, a_ + 2 * d_});
}

ZZ gp_closed(const ArithTriple& T, std::uint64_t p) {
    check_level(T, p);
    const ZZ a(static_cast<unsigned long>(T.a()));
    const ZZ d(static_cast<unsigned long>(T.d()));
    return (a + 2 * d) * ZZ(static_cast<unsigned long>(p)) +
           ((a - 2) / 2) * a + (a - 1) * d;
}

ZZ np_closed(const ArithTriple& T, std::uint64_t p) {
    check_level(T, p);
    const ZZ a(static_cast<unsigned long>(T.a()));
    const ZZ d(static_cast<unsigned long>(T.d()));
    const ZZ pz(static_cast<unsigned long>(p));
    ZZ base = (a - 1) * (a + 2 * d - 1);
    if (T.a() % 2 == 0) base += 1;
    return (2 * a + 2 * d - 1 - pz) * pz +
           exact_quotient(base, 4, "level-0 genus term");
}

ZZ sp_closed(const ArithTriple& T, std::uint64_t p) {
    check_level(T, p);
    const ZZ a(static_cast<unsigned long>(T.a()));
    const ZZ d(static_cast<unsigned long>(T.d()));
    const ZZ pz(static_cast<unsigned long>(p));

    ZZ c0 = (a - 1) * (a + 2 * d - 1) * (a * a + 2 * a * d - a - d - 2);
    ZZ c1, c2 = 3 * a * a + a * (6 * d - 1) + 4 * d * d - d;
    if (T.a() % 2 == 1) {
        c1 = 3 * a * a * a + 9 * a * a * (d - 1) +
             2 * a * (3 * d * d - 9 * d + 1) - 6 * d * d + 2 * d;
    } else {
        c0 += 3 * (a * a + 2 * a * d - a - d);
        c1 = 3 * a * a * a + 9 * a * a * (d - 1) +
             a * (6 * d * d - 18 * d + 5) - 6 * d * d + 5 * d;
    }
    ZZ num = c0 + 4 * c1 * pz + 12 * c2 * pz * pz -
             32 * (a + d) * pz * pz * pz;
    ZZ result = exact_quotient(num, 24, "Sylvester-sum polynomial");
#ifndef NDEBUG
    assert(result == sp_from_apery(apery_closed(T, p)));
#endif
    return result;
}

std::vector<AperyCell> apery_cells(const ArithTriple& T, std::uint64_t p) {
    check_level(T, p);
    const std::uint64_t a = T.a(), d = T.d();
    const ZZ a2(static_cast<unsigned long>(a + d));
    const ZZ a3(static_cast<unsigned long>(a + 2 * d));
    auto cell = [&](std::uint64_t x2, std::uint64_t x3) {
        return AperyCell{x2, x3,
                         a2 * ZZ(static_cast<unsigned long>(x2)) +
                             a3 * ZZ(static_cast<unsigned long>(x3))};
    };

    std::vector<AperyCell> cells;
    cells.reserve(a);
    if (a % 2 == 1) {
        const std::uint64_t h = (a - 1) / 2;
        // staircase: (x2, h + p - x2) for x2 = 0..2p-1
        for (std::uint64_t x2 = 0; x2 < 2 * p; ++x2)
            cells.push_back(cell(x2, h + p - x2));
        // block columns 2p and 2p+1
        for (std::uint64_t x3 = 0; x3 + p <= h; ++x3)
            cells.push_back(cell(2 * p, x3));
        for (std::uint64_t x3 = 0; x3 + p + 1 <= h; ++x3)
            cells.push_back(cell(2 * p + 1, x3));
    } else {
        const std::uint64_t h = a / 2;
        // staircase: row pairs (2k-2, h+p-2k+1), (2k-1, h+p-2k+1), k = 1..p
        for (std::uint64_t k = 1; k <= p; ++k) {
            const std::uint64_t x3 = h + p - 2 * k + 1;
            cells.push_back(cell(2 * k - 2, x3));
            cells.push_back(cell(2 * k - 1, x3));
        }
        // block columns 2p and 2p+1, each of height h - p
        for (std::uint64_t x3 = 0; x3 + p < h; ++x3)
            cells.push_back(cell(2 * p, x3));
        for (std::uint64_t x3 = 0; x3 + p < h; ++x3)
            cells.push_back(cell(2 * p + 1, x3));
    }
    if (cells.size() != a)
        throw InternalInconsistencyError(
            "closed-form enumeration produced " +
            std::to_string(cells.size()) + " cells, expected " +
            std::to_string(a));
    return cells;
}

AperySet apery_closed(const ArithTriple& T, std::uint64_t p) {
    const std::uint64_t a = T.a();
    std::vector<ZZ> elements(a);
    std::vector<AperyCoord> coords(a);
    std::vector<bool> seen(a, false);
    for (const AperyCell& c : apery_cells(T, p)) {
        const std::uint64_t r = mpz_fdiv_ui(c.value.get_mpz_t(),
                                            static_cast<unsigned long>(a));
        if (seen[r])
            throw InternalInconsistencyError(
                "closed-form enumeration repeats residue class " +
                std::to_string(r));
        seen[r] = true;
        elements[r] = c.value;
        coords[r] = AperyCoord{c.x2, c.x3};
    }
    return AperySet(T.instance(), p, std::move(elements), std::move(coords));
}

ZZ apery_sum_closed(const ArithTriple& T, std::uint64_t p) {
    check_level(T, p);
    const ZZ a(static_cast<unsigned long>(T.a()));
    const ZZ d(static_cast<unsigned long>(T.d()));
    const ZZ pz(static_cast<unsigned long>(p));
    ZZ inner = (a + d) * (a + d) - (d + 1) * (d + 1) - 4 * pz * pz +
               4 * (2 * a + 2 * d - 1) * pz;
    if (T.a() % 2 == 0) inner += 1;
    return exact_quotient(a * inner, 4, "Apery element sum");
}

ZZ power_sum_closed(const ArithTriple& T, std::uint64_t p, unsigned mu) {
    return power_sum(apery_closed(T, p), mu);
}

ZZ weighted_sum_closed(const ArithTriple& T, std::uint64_t p, long lambda,
                       unsigned mu) {
    return weighted_power_sum(apery_closed(T, p), lambda, mu);
}

TwoVarResult sylvester_two_var(std::uint64_t a, std::uint64_t b) {
    if (a < 2 || a >= b)
        throw DomainError("two-variable form requires 2 <= a < b");
    if (std::gcd(a, b) != 1)
        throw NotCoprimeError("gcd(" + std::to_string(a) + "," +
                              std::to_string(b) + ") != 1");
    const ZZ az(static_cast<unsigned long>(a));
    const ZZ bz(static_cast<unsigned long>(b));
    TwoVarResult r;
    r.g = (az - 1) * (bz - 1) - 1;
    r.n = exact_quotient((az - 1) * (bz - 1), 2, "two-variable genus");
    r.s = exact_quotient((az - 1) * (bz - 1) * (2 * az * bz - az - bz - 1),
                         12, "two-variable Sylvester sum");
    return r;
}

ZZ roberts_g(std::uint64_t a, std::uint64_t d, std::uint64_t k) {
    if (k < 2 || k > a)
        throw DomainError("arithmetic sequence requires 2 <= k <= a");
    if (d == 0) throw DomainError("arithmetic sequence requires d > 0");
    if (std::gcd(a, d) != 1)
        throw NotCoprimeError("gcd(a,d) != 1 for a = " + std::to_string(a) +
                              ", d = " + std::to_string(d));
    const ZZ az(static_cast<unsigned long>(a));
    const ZZ dz(static_cast<unsigned long>(d));
    return ZZ(static_cast<unsigned long>((a - 2) / (k - 1))) * az +
           (az - 1) * dz;
}

ZZ selmer_g(std::uint64_t a, std::uint64_t d, std::uint64_t h,
            std::uint64_t k) {
    if (h < 1) throw DomainError("almost-arithmetic sequence requires h >= 1");
    if (k < 2 || k > a)
        throw DomainError("almost-arithmetic sequence requires 2 <= k <= a");
    if (d == 0) throw DomainError("almost-arithmetic sequence requires d > 0");
    if (std::gcd(a, d) != 1)
        throw NotCoprimeError("gcd(a,d) != 1 for a = " + std::to_string(a) +
                              ", d = " + std::to_string(d));
    const ZZ az(static_cast<unsigned long>(a));
    const ZZ dz(static_cast<unsigned long>(d));
    const ZZ hz(static_cast<unsigned long>(h));
    return (hz * ZZ(static_cast<unsigned long>((a - 2) / (k - 1))) + hz - 1) *
               az +
           (az - 1) * dz;
}

SelmerDivision selmer_division(std::uint64_t a, std::uint64_t k) {
    if (k < 2) throw DomainError("division requires k >= 2");
    return SelmerDivision{(a - 1) / (k - 1), (a - 1) % (k - 1)};
}

ZZ selmer_n(std::uint64_t a, std::uint64_t d, std::uint64_t k) {
    if (k < 2 || k > a)
        throw DomainError("arithmetic sequence requires 2 <= k <= a");
    if (d == 0) throw DomainError("arithmetic sequence requires d > 0");
    if (std::gcd(a, d) != 1)
        throw NotCoprimeError("gcd(a,d) != 1 for a = " + std::to_string(a) +
                              ", d = " + std::to_string(d));
    const auto [q, r] = selmer_division(a, k);
    const ZZ az(static_cast<unsigned long>(a));
    const ZZ dz(static_cast<unsigned long>(d));
    const ZZ qz(static_cast<unsigned long>(q));
    const ZZ rz(static_cast<unsigned long>(r));
    return exact_quotient((az - 1) * (qz + dz) + rz * (qz + 1), 2,
                          "arithmetic-sequence genus");
}

}  // namespace frob
