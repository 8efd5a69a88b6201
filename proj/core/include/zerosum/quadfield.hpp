#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zerosum::quad {

/// x + y*omega in the integral basis {1, omega} of O_K.
struct QuadElement {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const QuadElement&, const QuadElement&) = default;
};

/// The maximal order O_K of K = Q(sqrt(-d)), d squarefree and positive.
///
/// omega = sqrt(-d) when d = 1, 2 (mod 4), with discriminant -4d; otherwise
/// omega = (1 + sqrt(-d))/2 and the discriminant is -d. omega satisfies
/// omega^2 = t*omega - m with t = trace(omega) and m = norm(omega).
class QuadOrder {
 public:
  static constexpr std::int64_t kMaxD = 1'000'000'000;

  explicit QuadOrder(std::int64_t d);

  std::int64_t d() const noexcept { return d_; }
  std::int64_t discriminant() const noexcept { return disc_; }
  std::int64_t omega_trace() const noexcept { return trace_; }
  std::int64_t omega_norm() const noexcept { return norm_; }

  /// x^2 + t*x*y + m*y^2, always >= 0.
  std::int64_t norm(const QuadElement& a) const;
  QuadElement multiply(const QuadElement& a, const QuadElement& b) const;
  QuadElement conjugate(const QuadElement& a) const;
  /// a / b when b divides a in O_K.
  std::optional<QuadElement> divide(const QuadElement& a, const QuadElement& b) const;
  bool is_unit(const QuadElement& a) const { return norm(a) == 1; }
  /// All units of O_K (2, 4 or 6 of them).
  std::vector<QuadElement> units() const;

  /// "sqrt(-26)" or "(1+sqrt(-23))/2".
  std::string omega_string() const;
  /// "7+sqrt(-26)", "-7-sqrt(-26)", "2", "3-2*(1+sqrt(-23))/2".
  std::string format(const QuadElement& a) const;

  friend bool operator==(const QuadOrder& a, const QuadOrder& b) { return a.d_ == b.d_; }

 private:
  std::int64_t d_;
  std::int64_t disc_;
  std::int64_t trace_;
  std::int64_t norm_;
};

/// Nonzero integral ideal scale * (a*Z + (b + omega)*Z) in Hermite normal form:
/// a > 0, 0 <= b < a, scale > 0, a | N(b + omega). The form is unique, so
/// equality is field-wise.
struct QuadIdeal {
  std::int64_t d = 1;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t scale = 1;

  friend bool operator==(const QuadIdeal&, const QuadIdeal&) = default;
};

/// HNF of the O_K-module generated by `gens`. Throws InvalidIdeal if empty or
/// all zero.
QuadIdeal ideal_from_generators(const QuadOrder& order, std::span<const QuadElement> gens);
QuadIdeal ideal_mul(const QuadOrder& order, const QuadIdeal& i, const QuadIdeal& j);
QuadIdeal ideal_pow(const QuadOrder& order, const QuadIdeal& i, unsigned exponent);
QuadIdeal unit_ideal(const QuadOrder& order);
/// scale^2 * a.
std::int64_t ideal_norm(const QuadIdeal& i);
bool ideal_contains(const QuadOrder& order, const QuadIdeal& i, const QuadElement& e);
/// Z-basis {scale*a, scale*(b + omega)}.
std::pair<QuadElement, QuadElement> ideal_basis(const QuadIdeal& i);
/// "<5, 2+sqrt(-26)>" style: the two HNF generators.
std::string format_ideal(const QuadOrder& order, const QuadIdeal& i);

/// Every element of the given norm (exhaustive over the finite ellipse).
std::vector<QuadElement> elements_of_norm(const QuadOrder& order, std::int64_t norm);

/// A generator of I if I is principal. Among associates the choice prefers
/// x > 0, then y >= 0, then the smallest (x, y).
std::optional<QuadElement> is_principal(const QuadOrder& order, const QuadIdeal& i);
/// alpha * u for every unit u, in canonical order.
std::vector<QuadElement> associates(const QuadOrder& order, const QuadElement& alpha);

/// Throws DomainError when alpha is zero or a unit.
bool is_irreducible(const QuadOrder& order, const QuadElement& alpha);

}  // namespace zerosum::quad
