#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

namespace rank3 {

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

/// An element of GF(p^r) in polynomial form, stored as its code
/// sum(c_i * p^i) over the coefficient vector c (low to high). The code is the
/// canonical element order used everywhere: modulus search, primitive element
/// scan, vertex labels of Cayley graphs.
///
/// Elements remember (p, r) so that mixing fields is caught. Fields are built
/// deterministically, so equal (p, r) means the same field.
class FieldElement {
 public:
  constexpr FieldElement() = default;

  [[nodiscard]] constexpr std::uint32_t code() const noexcept { return code_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return code_ == 0; }

  friend constexpr bool operator==(const FieldElement&, const FieldElement&) = default;
  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;

 private:
  friend class FiniteField;
  constexpr FieldElement(std::uint32_t p, std::uint32_t r, std::uint32_t code) noexcept
      : p_(p), r_(r), code_(code) {}

  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  std::uint32_t code_ = 0;
};

/// GF(p^r) with dense exp/log tables keyed by the primitive element omega.
/// Immutable after construction.
class FiniteField {
 public:
  /// Errors: NotPrime, DegreeOutOfRange (r == 0), CapExceeded (p^r > cap).
  static FiniteField build(std::uint32_t p, std::uint32_t r, std::uint64_t cap = kDefaultFieldCap);

  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] std::uint32_t degree() const noexcept { return r_; }
  [[nodiscard]] std::uint32_t order() const noexcept { return q_; }
  /// q - 1, the order of the multiplicative group.
  [[nodiscard]] std::uint32_t unit_order() const noexcept { return q_ - 1; }

  /// Monic irreducible modulus, r + 1 coefficients low to high.
  [[nodiscard]] std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  [[nodiscard]] FieldElement zero() const noexcept { return {p_, r_, 0}; }
  [[nodiscard]] FieldElement one() const noexcept { return {p_, r_, 1}; }
  [[nodiscard]] FieldElement omega() const noexcept { return {p_, r_, exp_.size() > 1 ? exp_[1] : 1}; }

  /// Element with the given code; InvalidArgument if code >= q.
  [[nodiscard]] FieldElement element(std::uint32_t code) const;
  [[nodiscard]] FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  [[nodiscard]] std::vector<std::uint32_t> coeffs(FieldElement x) const;
  [[nodiscard]] bool contains(FieldElement x) const noexcept { return x.p_ == p_ && x.r_ == r_ && x.code_ < q_; }

  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement neg(FieldElement a) const;
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const;
  /// Multiplicative inverse; LogOfZero for 0.
  [[nodiscard]] FieldElement inv(FieldElement a) const;
  /// a^e with 0^0 = 1.
  [[nodiscard]] FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// x -> x^p.
  [[nodiscard]] FieldElement frobenius(FieldElement x) const;

  /// Index i in [0, q-2] with omega^i = x. LogOfZero for x = 0.
  [[nodiscard]] std::uint32_t dlog(FieldElement x) const;
  /// omega^(i mod (q-1)).
  [[nodiscard]] FieldElement exp(std::uint64_t i) const;

  // Code-level kernels for the graph builders.
  [[nodiscard]] std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const noexcept;
  [[nodiscard]] std::uint32_t neg_code(std::uint32_t a) const noexcept;
  [[nodiscard]] std::uint32_t exp_code(std::uint64_t i) const noexcept { return exp_[i % exp_.size()]; }
  [[nodiscard]] std::uint32_t log_code(std::uint32_t code) const noexcept { return log_[code]; }

 private:
  FiniteField() = default;
  void require(FieldElement x) const;

  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // index -> code, size q - 1
  std::vector<std::uint32_t> log_;  // code -> index, log_[0] unused
};

/// {p, r, q, modulus: [c0..cr], omega: [coeffs]}.
nlohmann::json field_descriptor(const FiniteField& field);

}  // namespace rank3
