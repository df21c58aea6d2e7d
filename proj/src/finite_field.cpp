#include "rank3/finite_field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "rank3/error.hpp"
#include "rank3/number_theory.hpp"

namespace rank3 {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low to high

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t len) {
  Poly out(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& poly, std::uint32_t p, std::uint32_t len) {
  std::uint32_t code = 0;
  for (std::uint32_t i = len; i-- > 0;) code = code * p + (i < poly.size() ? poly[i] : 0);
  return code;
}

/// Monic polynomial of the given degree whose lower coefficients are the digits of `code`.
Poly monic(std::uint32_t code, std::uint32_t p, std::uint32_t degree) {
  Poly out = decode(code, p, degree);
  out.push_back(1);
  return out;
}

/// Reduces `num` in place modulo the monic polynomial `den`; result has deg(den) coefficients.
void reduce(Poly& num, const Poly& den, std::uint32_t p) {
  const std::size_t d = den.size() - 1;
  for (std::size_t top = num.size(); top-- > d;) {
    const std::uint32_t lead = num[top];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) {
      const std::size_t idx = top - d + j;
      num[idx] = static_cast<std::uint32_t>((num[idx] + static_cast<std::uint64_t>(p - lead) * den[j]) % p);
    }
  }
  num.resize(d);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t r = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= r / 2; ++d) {
    const std::uint64_t count = *nt::checked_pow(p, d, std::numeric_limits<std::uint64_t>::max());
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly rem = f;
      reduce(rem, monic(static_cast<std::uint32_t>(c), p, d), p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t v) { return v == 0; })) return false;
    }
  }
  return true;
}

class PolyRing {
 public:
  PolyRing(const Poly& modulus, std::uint32_t p) : modulus_(modulus), p_(p), r_(static_cast<std::uint32_t>(modulus.size() - 1)) {}

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const Poly x = decode(a, p_, r_);
    const Poly y = decode(b, p_, r_);
    Poly prod(2 * r_ - 1, 0);
    for (std::uint32_t i = 0; i < r_; ++i) {
      if (x[i] == 0) continue;
      for (std::uint32_t j = 0; j < r_; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
      }
    }
    reduce(prod, modulus_, p_);
    return encode(prod, p_, r_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1u) result = mul(result, a);
      a = mul(a, a);
      e >>= 1u;
    }
    return result;
  }

 private:
  const Poly& modulus_;
  std::uint32_t p_;
  std::uint32_t r_;
};

}  // namespace

FiniteField FiniteField::build(std::uint32_t p, std::uint32_t r, std::uint64_t cap) {
  if (!nt::is_prime(p)) throw Error(Errc::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
  if (r == 0) throw Error(Errc::DegreeOutOfRange, "extension degree must be >= 1");
  const std::uint64_t hard_cap = std::min<std::uint64_t>(cap, std::uint64_t{1} << 30);
  const auto q = nt::checked_pow(p, r, hard_cap);
  if (!q) {
    throw Error(Errc::CapExceeded, std::to_string(p) + "^" + std::to_string(r) + " exceeds field cap " + std::to_string(hard_cap));
  }

  FiniteField field;
  field.p_ = p;
  field.r_ = r;
  field.q_ = static_cast<std::uint32_t>(*q);

  // First irreducible monic polynomial in code order of its lower coefficients.
  for (std::uint32_t c = 0; c < field.q_; ++c) {
    Poly candidate = monic(c, p, r);
    if (is_irreducible(candidate, p)) {
      field.modulus_ = std::move(candidate);
      break;
    }
  }

  const PolyRing ring(field.modulus_, p);
  const std::uint64_t n = field.q_ - 1;
  const auto primes = nt::prime_factors(n);
  std::uint32_t omega = 0;
  for (std::uint32_t g = 1; g < field.q_; ++g) {
    if (ring.pow(g, n) != 1) continue;
    const bool primitive = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t ell) { return ring.pow(g, n / ell) != 1; });
    if (primitive) {
      omega = g;
      break;
    }
  }

  field.exp_.assign(n, 0);
  field.log_.assign(field.q_, std::numeric_limits<std::uint32_t>::max());
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    field.exp_[i] = x;
    field.log_[x] = static_cast<std::uint32_t>(i);
    x = ring.mul(x, omega);
  }
  if (x != 1 || std::count(field.log_.begin() + 1, field.log_.end(), std::numeric_limits<std::uint32_t>::max()) != 0) {
    throw std::logic_error("primitive element search produced a non-generator");
  }
  return field;
}

void FiniteField::require(FieldElement x) const {
  if (!contains(x)) {
    std::ostringstream os;
    os << "element of GF(" << x.p_ << "^" << x.r_ << ") used with GF(" << p_ << "^" << r_ << ")";
    throw Error(Errc::FieldMismatch, os.str());
  }
}

FieldElement FiniteField::element(std::uint32_t code) const {
  if (code >= q_) throw Error(Errc::InvalidArgument, "element code " + std::to_string(code) + " >= q");
  return {p_, r_, code};
}

FieldElement FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > r_) throw Error(Errc::InvalidArgument, "more than r coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(Errc::InvalidArgument, "coefficient out of range [0, p-1]");
    code = code * p_ + coeffs[i];
  }
  return {p_, r_, code};
}

std::vector<std::uint32_t> FiniteField::coeffs(FieldElement x) const {
  require(x);
  return decode(x.code_, p_, r_);
}

std::uint32_t FiniteField::add_codes(std::uint32_t a, std::uint32_t b) const noexcept {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    const std::uint32_t digit = (a % p_ + b % p_) % p_;
    out += digit * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint32_t FiniteField::neg_code(std::uint32_t a) const noexcept {
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  require(a);
  require(b);
  return {p_, r_, add_codes(a.code_, b.code_)};
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const {
  require(a);
  require(b);
  return {p_, r_, add_codes(a.code_, neg_code(b.code_))};
}

FieldElement FiniteField::neg(FieldElement a) const {
  require(a);
  return {p_, r_, neg_code(a.code_)};
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  require(a);
  require(b);
  if (a.is_zero() || b.is_zero()) return zero();
  const std::uint64_t n = unit_order();
  return {p_, r_, exp_[(static_cast<std::uint64_t>(log_[a.code_]) + log_[b.code_]) % n]};
}

FieldElement FiniteField::inv(FieldElement a) const {
  require(a);
  if (a.is_zero()) throw Error(Errc::LogOfZero, "zero has no inverse");
  const std::uint32_t n = unit_order();
  return {p_, r_, exp_[(n - log_[a.code_]) % n]};
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  require(a);
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t n = unit_order();
  const std::uint64_t idx = (log_[a.code_] * (e % n)) % n;
  return {p_, r_, exp_[idx]};
}

FieldElement FiniteField::frobenius(FieldElement x) const { return pow(x, p_); }

std::uint32_t FiniteField::dlog(FieldElement x) const {
  require(x);
  if (x.is_zero()) throw Error(Errc::LogOfZero, "discrete log of zero");
  return log_[x.code_];
}

FieldElement FiniteField::exp(std::uint64_t i) const { return {p_, r_, exp_code(i)}; }

nlohmann::json field_descriptor(const FiniteField& field) {
  const auto mod = field.modulus();
  return {
      {"p", field.characteristic()},
      {"r", field.degree()},
      {"q", field.order()},
      {"modulus", std::vector<std::uint32_t>(mod.begin(), mod.end())},
      {"omega", field.coeffs(field.omega())},
  };
}

}  // namespace rank3
