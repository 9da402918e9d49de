#include "frob/special_numbers.hpp"

#include <mutex>
#include <vector>

namespace frob {
namespace {

// Each table guards its growth with a mutex and hands out copies, so
// concurrent readers never observe a vector mid-reallocation.

class BernoulliCache {
public:
    QQ get(std::size_t k) {
        std::scoped_lock lock(mu_);
        while (values_.size() <= k) {
            // sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1
            std::size_t n = values_.size();
            QQ acc(0);
            for (std::size_t j = 0; j < n; ++j)
                acc += QQ(binomial(n + 1, j)) * values_[j];
            values_.push_back(-acc / QQ(ZZ(n + 1)));
        }
        return values_[k];
    }

private:
    std::mutex mu_;
    std::vector<QQ> values_{QQ(1)};
};

class EulerianCache {
public:
    ZZ get(std::size_t n, long m) {
        std::size_t width = n == 0 ? 1 : n;  // nonzero entries: 0 <= m < width
        if (m < 0 || static_cast<std::size_t>(m) >= width) return 0;
        std::scoped_lock lock(mu_);
        while (rows_.size() <= n) grow_row(rows_.size());
        return rows_[n][static_cast<std::size_t>(m)];
    }

private:
    void grow_row(std::size_t n) {
        std::size_t width = n == 0 ? 1 : n;
        std::vector<ZZ> row(width);
        for (std::size_t m = 0; m < width; ++m) {
            // <n m> = sum_{k=0}^{m} (-1)^k C(n+1,k) (m-k+1)^n
            ZZ acc(0);
            for (std::size_t k = 0; k <= m; ++k) {
                ZZ term = binomial(n + 1, k) * pow_zz(ZZ(m - k + 1), n);
                if (k % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            row[m] = acc;
        }
        rows_.push_back(std::move(row));
    }

    std::mutex mu_;
    std::vector<std::vector<ZZ>> rows_;
};

class Stirling2Cache {
public:
    ZZ get(std::size_t n, std::size_t m) {
        if (m > n) return 0;
        std::scoped_lock lock(mu_);
        while (rows_.size() <= n) grow_row(rows_.size());
        return rows_[n][m];
    }

private:
    void grow_row(std::size_t n) {
        std::vector<ZZ> row(n + 1);
        for (std::size_t m = 0; m <= n; ++m) {
            // {n m} = (1/m!) sum_{i=0}^{m} (-1)^i C(m,i) (m-i)^n
            ZZ acc(0);
            for (std::size_t i = 0; i <= m; ++i) {
                ZZ term = binomial(m, i) * pow_zz(ZZ(m - i), n);
                if (i % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ZZ mf = factorial(m);
            ZZ q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(),
                        mf.get_mpz_t());
            if (r != 0)
                throw InternalInconsistencyError(
                    "stirling2 alternating sum not divisible by m!");
            row[m] = q;
        }
        rows_.push_back(std::move(row));
    }

    std::mutex mu_;
    std::vector<std::vector<ZZ>> rows_;
};

BernoulliCache& bernoulli_cache() {
    static BernoulliCache c;
    return c;
}
EulerianCache& eulerian_cache() {
    static EulerianCache c;
    return c;
}
Stirling2Cache& stirling2_cache() {
    static Stirling2Cache c;
    return c;
}

}  // namespace

QQ bernoulli(std::size_t k) { return bernoulli_cache().get(k); }

ZZ eulerian(std::size_t n, long m) { return eulerian_cache().get(n, m); }

ZZ stirling2(std::size_t n, std::size_t m) {
    return stirling2_cache().get(n, m);
}

}  // namespace frob
