#pragma once

#include <cstdint>
#include <vector>

#include "frob/apery.hpp"
#include "frob/instance.hpp"
#include "frob/numeric.hpp"

namespace frob {

/// Arithmetic triple (a, a+d, a+2d) with a >= 3, d > 0, gcd(a,d) = 1.
/// The closed forms below are validated for levels 0 <= p <= floor(a/2)
/// and refuse anything beyond.
class ArithTriple {
public:
    ArithTriple(std::uint64_t a, std::uint64_t d);

    std::uint64_t a() const { return a_; }
    std::uint64_t d() const { return d_; }
    std::uint64_t max_level() const { return a_ / 2; }
    Instance instance() const;

private:
    std::uint64_t a_;
    std::uint64_t d_;
};

/// One cell of the closed-form Apery enumeration:
/// value = (a+d)*x2 + (a+2d)*x3.
struct AperyCell {
    std::uint64_t x2;
    std::uint64_t x3;
    ZZ value;
};

/// q, r with a-1 = q(k-1) + r, 0 <= r < k-1.
struct SelmerDivision {
    std::uint64_t q;
    std::uint64_t r;
};

/// p-Frobenius number (a+2d)p + floor((a-2)/2)*a + (a-1)d.
ZZ gp_closed(const ArithTriple& T, std::uint64_t p);

/// p-genus, parity-branched on a.
ZZ np_closed(const ArithTriple& T, std::uint64_t p);

/// p-Sylvester sum, the cubic-in-p polynomial for the parity of a.
ZZ sp_closed(const ArithTriple& T, std::uint64_t p);

/// The staircase + two-column block cells, in sweep order: staircase by
/// ascending x2, then column 2p, then column 2p+1.
std::vector<AperyCell> apery_cells(const ArithTriple& T, std::uint64_t p);

/// Closed-form p-Apery set, with (x2,x3) coordinates populated.
AperySet apery_closed(const ArithTriple& T, std::uint64_t p);

/// Sum of all closed-form Apery elements as a single polynomial in p,
/// independent of the cell enumeration.
ZZ apery_sum_closed(const ArithTriple& T, std::uint64_t p);

/// Power sum via the closed-form enumeration fed into the Bernoulli
/// identity; mu >= 1.
ZZ power_sum_closed(const ArithTriple& T, std::uint64_t p, unsigned mu);

/// Weighted power sum via the closed-form enumeration fed into the Eulerian
/// identity; lambda outside {0,1}, lambda^a != 1, mu >= 1.
ZZ weighted_sum_closed(const ArithTriple& T, std::uint64_t p, long lambda,
                       unsigned mu);

struct TwoVarResult {
    ZZ g;
    ZZ n;
    ZZ s;
};

/// Classical two-generator values g = (a-1)(b-1)-1, n = (a-1)(b-1)/2,
/// s = (a-1)(b-1)(2ab-a-b-1)/12. Requires gcd(a,b) = 1, 2 <= a < b.
TwoVarResult sylvester_two_var(std::uint64_t a, std::uint64_t b);

/// Frobenius number of (a, a+d, ..., a+(k-1)d): floor((a-2)/(k-1))*a+(a-1)d.
ZZ roberts_g(std::uint64_t a, std::uint64_t d, std::uint64_t k);

/// Frobenius number of (a, ha+d, ..., ha+(k-1)d) for h >= 1.
ZZ selmer_g(std::uint64_t a, std::uint64_t d, std::uint64_t h,
            std::uint64_t k);

/// Genus of (a, a+d, ..., a+(k-1)d): ((a-1)(q+d) + r(q+1))/2 with
/// a-1 = q(k-1) + r.
ZZ selmer_n(std::uint64_t a, std::uint64_t d, std::uint64_t k);

SelmerDivision selmer_division(std::uint64_t a, std::uint64_t k);

}  // namespace frob
