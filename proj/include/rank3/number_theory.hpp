#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Small-integer helpers shared by the field, action and family modules.
namespace rank3::nt {

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime divisors in ascending order; empty for n <= 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Moduli must stay below 2^32.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept;

/// Multiplicative order of a modulo n. Requires gcd(a, n) = 1; returns 1 for n = 1.
/// Returns 0 when a is not a unit.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// (p, r) with q = p^r, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Prime powers 2 <= q <= limit in ascending order.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);

/// p^r, or nullopt if it exceeds limit.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint32_t r, std::uint64_t limit) noexcept;

}  // namespace rank3::nt
