#include "zerosum/class_group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"

namespace zerosum::quad {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceError("binary form arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void ext_gcd(i128 a, i128 b, i128& u, i128& v, i128& g) {
  i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
  g = old_r;
}

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<i128>(r) * r > v) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::int64_t c_from(std::int64_t a, std::int64_t b, std::int64_t disc) {
  const i128 num = i128{b} * b - disc;
  if (num % (4 * i128{a}) != 0) throw std::logic_error("form coefficients do not fit the discriminant");
  return narrow(num / (4 * i128{a}));
}

bool primitive(const BinaryForm& f) {
  return std::gcd(std::gcd(f.a, f.b < 0 ? -f.b : f.b), f.c) == 1;
}

void check_disc(std::int64_t disc, std::int64_t max_abs) {
  if (disc >= 0) throw DomainError("only negative discriminants are supported");
  const i128 m = disc % 4;
  if (m != 0 && m != -3) throw DomainError("discriminant must be 0 or 1 mod 4");
  if (-disc > max_abs) {
    throw ResourceError("|D| = " + std::to_string(-disc) + " exceeds the class-group budget " +
                        std::to_string(max_abs));
  }
}

// Canonical preference among associates: x > 0, then y >= 0, then smallest (x, y).
auto canonical_key(const QuadElement& e) {
  return std::tuple(e.x > 0 ? 0 : 1, e.y >= 0 ? 0 : 1, e.x, e.y);
}

}  // namespace

std::int64_t BinaryForm::discriminant() const { return narrow(i128{b} * b - i128{4} * a * c); }

bool is_reduced(const BinaryForm& f) {
  const std::int64_t ab = f.b < 0 ? -f.b : f.b;
  if (!(ab <= f.a && f.a <= f.c)) return false;
  if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

BinaryForm reduce(BinaryForm f) {
  if (f.a <= 0 || f.c <= 0) throw DomainError("only positive definite forms can be reduced");
  const std::int64_t disc = f.discriminant();
  while (true) {
    // Translate b into (-a, a].
    if (f.b <= -f.a || f.b > f.a) {
      const i128 two_a = 2 * i128{f.a};
      const i128 k = floor_div(i128{f.a} - f.b, two_a);
      f.b = narrow(f.b + k * two_a);
      f.c = c_from(f.a, f.b, disc);
    }
    if (f.a > f.c) {
      f = BinaryForm{f.c, -f.b, f.a};
      continue;
    }
    break;
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

BinaryForm compose(const BinaryForm& f1, const BinaryForm& f2) {
  const std::int64_t disc = f1.discriminant();
  if (f2.discriminant() != disc) throw DomainError("cannot compose forms of different discriminants");
  BinaryForm p = f1, q = f2;
  if (p.a > q.a) std::swap(p, q);
  const i128 s = (i128{p.b} + q.b) / 2;
  const i128 n = i128{q.b} - s;
  i128 y1, d;
  if (q.a % p.a == 0) {
    y1 = 0;
    d = p.a;
  } else {
    i128 u, v;
    ext_gcd(q.a, p.a, u, v, d);
    y1 = u;
  }
  i128 x2, y2, d1;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    ext_gcd(s, d, x2, y2, d1);
    y2 = -y2;
  }
  const i128 v1 = p.a / d1;
  const i128 v2 = q.a / d1;
  i128 r = (y1 * y2 * n - x2 * q.c) % v1;
  if (r < 0) r += v1;
  BinaryForm out;
  out.a = narrow(v1 * v2);
  out.b = narrow(q.b + 2 * v2 * r);
  out.c = c_from(out.a, out.b, disc);
  return out;
}

BinaryForm principal_form(std::int64_t disc) {
  const std::int64_t b = (disc % 2 == 0) ? 0 : 1;
  return BinaryForm{1, b, c_from(1, b, disc)};
}

BinaryForm form_from_ideal(const QuadOrder& order, const QuadIdeal& ideal) {
  if (ideal.d != order.d()) throw InvalidIdeal("ideal belongs to a different order");
  const std::int64_t b = -(2 * ideal.b + order.omega_trace());
  return BinaryForm{ideal.a, b, c_from(ideal.a, b, order.discriminant())};
}

QuadIdeal ideal_from_form(const QuadOrder& order, const BinaryForm& form) {
  if (form.discriminant() != order.discriminant()) {
    throw DomainError("form discriminant does not match the order");
  }
  if (form.a <= 0) throw DomainError("form must be positive definite");
  std::int64_t b = (-form.b - order.omega_trace()) / 2 % form.a;
  if (b < 0) b += form.a;
  return QuadIdeal{order.d(), form.a, b, 1};
}

std::vector<BinaryForm> reduced_forms(std::int64_t disc) {
  check_disc(disc, std::numeric_limits<std::int64_t>::max());
  std::vector<BinaryForm> out;
  const std::int64_t a_max = isqrt(-disc / 3);
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - disc) & 1) != 0) continue;
      const i128 num = i128{b} * b - disc;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = narrow(num / (4 * a));
      const BinaryForm f{a, b, c};
      if (c < a || !is_reduced(f) || !primitive(f)) continue;
      out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinaryForm> reduced_forms_by_scan(std::int64_t disc) {
  check_disc(disc, std::numeric_limits<std::int64_t>::max());
  std::vector<BinaryForm> out;
  for (std::int64_t b = disc & 1; 3 * b * b <= -disc; b += 2) {
    const std::int64_t q = narrow((i128{b} * b - disc) / 4);
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= q; ++a) {
      if (q % a != 0) continue;
      const std::int64_t c = q / a;
      auto take = [&](const BinaryForm& f) {
        if (primitive(f)) out.push_back(f);
      };
      take({a, b, c});
      if (b != 0 && b != a && a != c) take({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassGroup::ClassGroup(const QuadOrder& order, std::int64_t max_abs_discriminant)
    : discriminant_(order.discriminant()) {
  check_disc(discriminant_, max_abs_discriminant);
  reps_ = reduced_forms(discriminant_);
  // Principal form first: it is the unique reduced form with a = 1.
  for (std::size_t i = 0; i < reps_.size(); ++i) index_.emplace(reps_[i], i);
  const auto h = static_cast<std::int64_t>(reps_.size());

  orders_.assign(reps_.size(), 0);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    std::size_t power = i;
    std::int64_t k = 1;
    while (power != identity_index()) {
      power = compose_index(power, i);
      if (++k > h) throw std::logic_error("class group element order exceeds h");
    }
    orders_[i] = k;
  }

  // Invariant factors from the counts of elements killed by p^j.
  std::vector<std::int64_t> factors(1, 1);
  std::int64_t rest = h;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    // at_least[j] = number of cyclic p-factors of exponent >= j
    std::vector<int> at_least(static_cast<std::size_t>(e) + 2, 0);
    std::int64_t previous = 1;
    std::int64_t pj = 1;
    for (int j = 1; j <= e; ++j) {
      pj *= p;
      std::int64_t count = 0;
      for (auto o : orders_) count += (pj % o == 0) ? 1 : 0;
      int rank = 0;
      for (std::int64_t ratio = count / previous; ratio > 1; ratio /= p) ++rank;
      at_least[static_cast<std::size_t>(j)] = rank;
      previous = count;
    }
    const int r = at_least[1];
    if (static_cast<std::size_t>(r) > factors.size()) {
      factors.insert(factors.begin(), static_cast<std::size_t>(r) - factors.size(), 1);
    }
    // Largest factors absorb the largest exponents; factors is kept ascending.
    for (int i = 0; i < r; ++i) {
      int exponent = 0;
      for (int j = 1; j <= e; ++j) {
        if (at_least[static_cast<std::size_t>(j)] > i) exponent = j;
      }
      std::int64_t pe = 1;
      for (int k = 0; k < exponent; ++k) pe *= p;
      factors[factors.size() - 1 - static_cast<std::size_t>(i)] *= pe;
    }
  }
  for (auto f : factors) {
    if (f > 1) structure_.push_back(f);
  }

  if (is_cyclic()) {
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      if (orders_[i] == h) {
        generator_ = i;
        break;
      }
    }
    log_.assign(reps_.size(), -1);
    std::size_t power = identity_index();
    for (std::int64_t k = 0; k < h; ++k) {
      log_[power] = k;
      power = compose_index(power, *generator_);
    }
  }
}

std::size_t ClassGroup::index_of(const BinaryForm& reduced) const {
  auto it = index_.find(reduced);
  if (it == index_.end()) throw DomainError("form is not a reduced form of this discriminant");
  return it->second;
}

std::size_t ClassGroup::compose_index(std::size_t i, std::size_t j) const {
  return index_of(reduce(compose(reps_.at(i), reps_.at(j))));
}

std::int64_t ClassGroup::discrete_log(std::size_t i) const {
  if (!is_cyclic()) throw StructureError("class group is not cyclic");
  return log_.at(i);
}

ClassGroup class_group(const QuadOrder& order) { return ClassGroup(order); }

std::size_t ideal_class_index(const ClassGroup& cg, const QuadOrder& order, const QuadIdeal& ideal) {
  if (order.discriminant() != cg.discriminant()) {
    throw InvalidIdeal("ideal and class group belong to different orders");
  }
  return cg.index_of(reduce(form_from_ideal(order, ideal)));
}

std::int64_t ideal_class(const ClassGroup& cg, const QuadOrder& order, const QuadIdeal& ideal) {
  return cg.discrete_log(ideal_class_index(cg, order, ideal));
}

std::optional<QuadElement> is_principal(const QuadOrder& order, const QuadIdeal& ideal) {
  if (ideal.d != order.d()) throw InvalidIdeal("ideal belongs to a different order");
  if (reduce(form_from_ideal(order, ideal)) != principal_form(order.discriminant())) {
    return std::nullopt;
  }
  std::vector<QuadElement> found;
  for (const auto& e : elements_of_norm(order, ideal_norm(ideal))) {
    if (!ideal_contains(order, ideal, e)) continue;
    const QuadElement gens[] = {e};
    if (ideal_from_generators(order, gens) == ideal) found.push_back(e);
  }
  if (found.empty()) throw std::logic_error("principal class without a generator of matching norm");
  return *std::min_element(found.begin(), found.end(), [](const auto& l, const auto& r) {
    return canonical_key(l) < canonical_key(r);
  });
}

ShortPrincipalProduct find_short_principal_product(const QuadOrder& order,
                                                   std::span<const QuadIdeal> ideals) {
  const ClassGroup cg(order);
  if (!cg.is_cyclic()) throw StructureError("class group is not cyclic");
  const std::int64_t h = cg.order_h();
  if (static_cast<std::int64_t>(ideals.size()) != h) {
    throw ArityError("expected exactly h = " + std::to_string(h) + " ideals, got " +
                     std::to_string(ideals.size()));
  }
  ShortPrincipalProduct out;
  out.n = h;
  const AbelianGroup zn = AbelianGroup::cyclic(h);
  std::vector<GroupElement> classes;
  for (const auto& ideal : ideals) {
    const std::int64_t c = ideal_class(cg, order, ideal);
    out.classes.push_back(c);
    classes.push_back(GroupElement{{c}});
  }
  const ZSequence seq(zn, classes);
  out.support = static_cast<std::int64_t>(support_size(seq));
  out.bound = h - out.support + 1;
  const MZResult shortest = mz(seq);
  out.mz = shortest.value;
  if (!shortest.witness) throw std::logic_error("a length-h sequence over Z_h has a zero sum");

  // Map the witness classes back to the first unused input positions.
  std::vector<bool> used(ideals.size(), false);
  for (const auto& g : shortest.witness->entries()) {
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (!used[i] && out.classes[i] == g.coords[0]) {
        used[i] = true;
        out.indices.push_back(i);
        break;
      }
    }
  }
  std::sort(out.indices.begin(), out.indices.end());
  out.product = unit_ideal(order);
  for (auto i : out.indices) out.product = ideal_mul(order, out.product, ideals[i]);
  const auto generator = is_principal(order, out.product);
  if (!generator) throw std::logic_error("zero-sum of classes produced a non-principal product");
  out.generator = *generator;
  out.within_bound = static_cast<std::int64_t>(out.indices.size()) <= out.bound;
  if (ideal_norm(out.product) > 1) out.irreducible = is_irreducible(order, out.generator);
  return out;
}

}  // namespace zerosum::quad
