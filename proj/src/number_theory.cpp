#include "rank3/number_theory.hpp"

#include <numeric>

namespace rank3::nt {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1u) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1u;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) return 0;
  std::uint64_t order = 1;
  std::uint64_t x = a % n;
  while (x != 1) {
    x = (x * a) % n;
    ++order;
  }
  return order;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto primes = prime_factors(q);
  if (primes.size() != 1) return std::nullopt;
  std::uint32_t r = 0;
  while (q > 1) {
    q /= primes.front();
    ++r;
  }
  return std::pair{primes.front(), r};
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (prime_power(q)) out.push_back(q);
  }
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint32_t r, std::uint64_t limit) noexcept {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    if (q > limit / p) return std::nullopt;
    q *= p;
  }
  if (q > limit) return std::nullopt;
  return q;
}

}  // namespace rank3::nt
