#pragma once

#include <cstdint>
#include <vector>

namespace mcm {

using u128 = unsigned __int128;

/// Distinct prime factors of n, ascending. Works for any 64-bit n.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_prime_u64(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace mcm
