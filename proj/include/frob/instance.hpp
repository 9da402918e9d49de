#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frob/errors.hpp"

namespace frob {

/// A validated generator tuple a1 < a2 < ... < ak with gcd 1, k >= 2.
class Instance {
public:
    explicit Instance(std::vector<std::uint64_t> generators);

    const std::vector<std::uint64_t>& generators() const { return gens_; }
    std::uint64_t least() const { return gens_.front(); }
    std::size_t arity() const { return gens_.size(); }

    std::string to_string() const;  // "a1,a2,...,ak"

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<std::uint64_t> gens_;
};

}  // namespace frob
