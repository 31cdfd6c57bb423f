#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace agcolor {

/// A field element, identified by the base-p integer of its coefficient
/// vector: (c_0, ..., c_{m-1}) has index sum c_i p^i. Index 0 is zero and
/// index 1 is one.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

struct FieldLimits {
  std::uint32_t max_order = 32;
};

/// GF(p^m) with full addition/multiplication tables.
///
/// The modulus is the lexicographically least monic irreducible polynomial
/// of degree m, coefficients compared from the constant term upwards. For
/// m = 1 the modulus is x. Copies share the tables; all operations are pure.
class Field {
 public:
  /// Throws std::invalid_argument for non-prime p or m == 0, and
  /// std::length_error when p^m exceeds the limit.
  static Field create(std::uint32_t p, std::uint32_t m, FieldLimits limits = {});

  std::uint32_t characteristic() const { return t_->p; }
  std::uint32_t degree() const { return t_->m; }
  std::uint32_t order() const { return t_->q; }
  /// Coefficients c_0..c_m of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element element(std::uint32_t index) const;
  std::vector<Element> elements() const;

  Element add(Element a, Element b) const { return {t_->add[a.index * t_->q + b.index]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const { return {t_->mul[a.index * t_->q + b.index]}; }
  Element neg(Element a) const { return {t_->neg[a.index]}; }
  /// Throws std::domain_error for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(std::span<const std::uint32_t> coeffs) const;

  std::uint32_t multiplicative_order(Element a) const;
  /// Least-index element of multiplicative order q - 1.
  Element primitive_element() const;

  /// Human-readable modulus, e.g. "x^2+x+1".
  std::string modulus_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_->p == b.t_->p && a.t_->m == b.t_->m && a.t_->modulus == b.t_->modulus;
  }

 private:
  struct Tables {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> mul;
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> inv;
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n);

/// Returns (p, m) with q = p^m, or throws std::invalid_argument if q is not
/// a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

/// Field of order q (a prime power).
Field field_of_order(std::uint32_t q, FieldLimits limits = {});

/// Polynomials over a Field, stored low-degree first without trailing zeros.
using Poly = std::vector<Element>;

namespace poly {

Poly trim(Poly a);
int degree(const Poly& a);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
/// Remainder of a modulo a nonzero b.
Poly mod(const Field& f, const Poly& a, const Poly& b);
/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Field& f, const Poly& a);
/// Lexicographically least monic irreducible polynomial of the given degree,
/// comparing coefficients from the constant term upwards.
Poly least_irreducible(const Field& f, std::uint32_t degree);

}  // namespace poly

/// GF(q^k) as a k-dimensional vector space over a base field GF(q).
///
/// Elements are coefficient vectors of length k over the base field; the
/// index of an element is sum c_i q^i. Used for field reduction (spreads)
/// and for the Singer cycle.
class Extension {
 public:
  Extension(Field base, std::uint32_t degree);

  const Field& base() const { return base_; }
  std::uint32_t degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const Poly& modulus() const { return modulus_; }

  using Value = std::vector<Element>;

  Value zero() const { return Value(degree_, base_.zero()); }
  Value one() const;
  /// t, the class of x modulo the defining polynomial.
  Value generator() const;
  Value from_index(std::uint64_t index) const;
  std::uint64_t index_of(const Value& a) const;

  Value add(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value pow(Value a, std::uint64_t e) const;
  bool is_primitive(const Value& a) const;
  /// Least-index element of multiplicative order q^k - 1.
  Value primitive_element() const;

 private:
  Field base_;
  std::uint32_t degree_;
  std::uint64_t order_;
  Poly modulus_;
};

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace agcolor
