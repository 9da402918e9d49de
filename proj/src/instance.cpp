#include "frob/instance.hpp"

#include <numeric>
#include <sstream>

namespace frob {

Instance::Instance(std::vector<std::uint64_t> generators)
    : gens_(std::move(generators)) {
    if (gens_.size() < 2)
        throw DomainError("need at least two generators, got " +
                          std::to_string(gens_.size()));
    if (gens_.front() == 0) throw DomainError("generators must be positive");
    for (std::size_t i = 1; i < gens_.size(); ++i)
        if (gens_[i] <= gens_[i - 1])
            throw DomainError(
                "generators must be strictly increasing (offending pair " +
                std::to_string(gens_[i - 1]) + "," + std::to_string(gens_[i]) +
                ")");
    std::uint64_t g = gens_.front();
    for (std::size_t i = 1; i < gens_.size(); ++i)
        g = std::gcd(g, gens_[i]);
    if (g != 1)
        throw NotCoprimeError("gcd of generators is " + std::to_string(g) +
                              ", must be 1");
}

std::string Instance::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ',';
        os << gens_[i];
    }
    return os.str();
}

}  // namespace frob
