#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "zerosum/quadfield.hpp"
#include "zerosum/sumset.hpp"

namespace zerosum::quad {

/// a*x^2 + b*x*y + c*y^2 with discriminant b^2 - 4ac.
struct BinaryForm {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;

  std::int64_t discriminant() const;
  friend auto operator<=>(const BinaryForm&, const BinaryForm&) = default;
};

/// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
bool is_reduced(const BinaryForm& f);
/// The reduced form equivalent to a positive definite form.
BinaryForm reduce(BinaryForm f);
/// Gauss composition (not reduced).
BinaryForm compose(const BinaryForm& f, const BinaryForm& g);
BinaryForm principal_form(std::int64_t discriminant);

/// Ideal a*Z + (b + omega)*Z  <->  form (a, -(2b + t), N(b + omega)/a), t = trace(omega).
/// The content (scale) of the ideal is dropped.
BinaryForm form_from_ideal(const QuadOrder& order, const QuadIdeal& ideal);
QuadIdeal ideal_from_form(const QuadOrder& order, const BinaryForm& form);

/// Reduced primitive forms of discriminant D, enumerating a <= sqrt(|D|/3).
std::vector<BinaryForm> reduced_forms(std::int64_t discriminant);
/// Same set found independently: for each |b| <= sqrt(|D|/3), factor
/// (b^2 - D)/4 = a*c with |b| <= a <= c.
std::vector<BinaryForm> reduced_forms_by_scan(std::int64_t discriminant);

/// Cl(K) as the set of reduced forms under composition.
class ClassGroup {
 public:
  static constexpr std::int64_t kDefaultMaxAbsDiscriminant = 1'000'000;

  explicit ClassGroup(const QuadOrder& order,
                      std::int64_t max_abs_discriminant = kDefaultMaxAbsDiscriminant);

  std::int64_t discriminant() const noexcept { return discriminant_; }
  std::int64_t order_h() const noexcept { return static_cast<std::int64_t>(reps_.size()); }
  const std::vector<BinaryForm>& element_reps() const noexcept { return reps_; }
  /// Invariant factors n1 | n2 | ... (empty for the trivial group).
  const std::vector<std::int64_t>& structure() const noexcept { return structure_; }
  bool is_cyclic() const noexcept { return structure_.size() <= 1; }
  /// Index of the chosen generator: the first representative of order h.
  std::optional<std::size_t> generator_index() const noexcept { return generator_; }

  std::size_t identity_index() const noexcept { return 0; }
  std::size_t index_of(const BinaryForm& reduced) const;
  std::size_t compose_index(std::size_t i, std::size_t j) const;
  std::int64_t element_order(std::size_t i) const { return orders_.at(i); }

  /// k with generator^k = reps[i]; StructureError if Cl(K) is not cyclic.
  std::int64_t discrete_log(std::size_t i) const;

 private:
  std::int64_t discriminant_;
  std::vector<BinaryForm> reps_;
  std::map<BinaryForm, std::size_t> index_;
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> structure_;
  std::optional<std::size_t> generator_;
  std::vector<std::int64_t> log_;  // log_[rep index] when cyclic
};

ClassGroup class_group(const QuadOrder& order);

/// Index into element_reps() of the class of `ideal`.
std::size_t ideal_class_index(const ClassGroup& cg, const QuadOrder& order, const QuadIdeal& ideal);
/// The class of `ideal` as an exponent of the chosen generator, in Z_h.
std::int64_t ideal_class(const ClassGroup& cg, const QuadOrder& order, const QuadIdeal& ideal);

struct ShortPrincipalProduct {
  std::vector<std::size_t> indices;  ///< positions in the input list, ascending
  std::vector<std::int64_t> classes; ///< class of every input ideal in Z_n
  std::int64_t n = 0;                ///< class number
  std::int64_t support = 0;          ///< distinct classes among the inputs
  std::int64_t bound = 0;            ///< n - support + 1
  MzValue mz = MzValue::infinity();
  QuadIdeal product;
  QuadElement generator;
  bool within_bound = false;
  /// Empty when the product is the unit ideal (generator is a unit).
  std::optional<bool> irreducible;
};

/// For exactly h ideals in a field with cyclic class group of order h: the
/// shortest sub-multiset whose classes sum to 0, its principal product and
/// generator. Throws StructureError (non-cyclic) or ArityError (wrong count).
ShortPrincipalProduct find_short_principal_product(const QuadOrder& order,
                                                   std::span<const QuadIdeal> ideals);

}  // namespace zerosum::quad
