#include "zerosum/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "zerosum/errors.hpp"

namespace zerosum::quad {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceError("quadratic-field arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 mod128(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

// u*a + v*b = g = gcd(a, b) >= 0.
void ext_gcd(i128 a, i128 b, i128& u, i128& v, i128& g) {
  i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i128 q = old_r / r;
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

bool is_squarefree(std::int64_t d) {
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<i128>(r) * r > v) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Canonical preference among associates: x > 0, then y >= 0, then smallest (x, y).
auto canonical_key(const QuadElement& e) {
  return std::tuple(e.x > 0 ? 0 : 1, e.y >= 0 ? 0 : 1, e.x, e.y);
}

}  // namespace

QuadOrder::QuadOrder(std::int64_t d) : d_(d) {
  if (d < 1 || d > kMaxD) throw DomainError("d must be in [1, 10^9], got " + std::to_string(d));
  if (!is_squarefree(d)) throw DomainError(std::to_string(d) + " is not squarefree");
  if (d % 4 == 3) {
    disc_ = -d;
    trace_ = 1;
    norm_ = (1 + d) / 4;
  } else {
    disc_ = -4 * d;
    trace_ = 0;
    norm_ = d;
  }
}

std::int64_t QuadOrder::norm(const QuadElement& a) const {
  return narrow(i128{a.x} * a.x + i128{trace_} * a.x * a.y + i128{norm_} * a.y * a.y);
}

QuadElement QuadOrder::multiply(const QuadElement& a, const QuadElement& b) const {
  const i128 yy = i128{a.y} * b.y;
  return {narrow(i128{a.x} * b.x - i128{norm_} * yy),
          narrow(i128{a.x} * b.y + i128{a.y} * b.x + i128{trace_} * yy)};
}

QuadElement QuadOrder::conjugate(const QuadElement& a) const {
  return {narrow(i128{a.x} + i128{trace_} * a.y), -a.y};
}

std::optional<QuadElement> QuadOrder::divide(const QuadElement& a, const QuadElement& b) const {
  const std::int64_t nb = norm(b);
  if (nb == 0) return std::nullopt;
  const QuadElement p = multiply(a, conjugate(b));
  if (p.x % nb != 0 || p.y % nb != 0) return std::nullopt;
  return QuadElement{p.x / nb, p.y / nb};
}

std::vector<QuadElement> QuadOrder::units() const {
  auto out = elements_of_norm(*this, 1);
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return canonical_key(l) < canonical_key(r); });
  return out;
}

std::string QuadOrder::omega_string() const {
  const std::string root = "sqrt(-" + std::to_string(d_) + ")";
  return trace_ == 0 ? root : "(1+" + root + ")/2";
}

std::string QuadOrder::format(const QuadElement& a) const {
  std::string out;
  if (a.x != 0 || a.y == 0) out = std::to_string(a.x);
  if (a.y != 0) {
    if (a.y < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const std::int64_t m = a.y < 0 ? -a.y : a.y;
    if (m != 1) out += std::to_string(m) + '*';
    out += omega_string();
  }
  return out;
}

QuadIdeal unit_ideal(const QuadOrder& order) { return QuadIdeal{order.d(), 1, 0, 1}; }

QuadIdeal ideal_from_generators(const QuadOrder& order, std::span<const QuadElement> gens) {
  // Z-span of {g, g*omega}: keep a row (x0, y_gcd) and the modulus m of the
  // y = 0 sublattice.
  i128 m = 0, x0 = 0, g = 0;
  auto add = [&](i128 x, i128 y) {
    if (y == 0) {
      m = gcd128(m, x);
    } else if (g == 0) {
      x0 = y < 0 ? -x : x;
      g = abs128(y);
    } else {
      i128 u, v, h;
      ext_gcd(g, y, u, v, h);
      m = gcd128(m, (y / h) * x0 - (g / h) * x);
      x0 = u * x0 + v * x;
      g = h;
    }
    if (m != 0) x0 = mod128(x0, m);
  };
  for (const auto& e : gens) {
    add(e.x, e.y);
    // e * omega = -m_w*y + (x + t*y) omega
    add(-i128{order.omega_norm()} * e.y, i128{e.x} + i128{order.omega_trace()} * e.y);
  }
  if (g == 0 || m == 0) throw InvalidIdeal("generators span the zero ideal");
  if (m % g != 0 || x0 % g != 0) throw InvalidIdeal("generators do not span an O_K-ideal");
  QuadIdeal out;
  out.d = order.d();
  out.scale = narrow(g);
  out.a = narrow(m / g);
  out.b = narrow(mod128(x0 / g, m / g));
  const i128 nb = i128{out.b} * out.b + i128{order.omega_trace()} * out.b + order.omega_norm();
  if (nb % out.a != 0) throw InvalidIdeal("HNF is not closed under omega");
  return out;
}

std::pair<QuadElement, QuadElement> ideal_basis(const QuadIdeal& i) {
  return {QuadElement{narrow(i128{i.scale} * i.a), 0},
          QuadElement{narrow(i128{i.scale} * i.b), i.scale}};
}

QuadIdeal ideal_mul(const QuadOrder& order, const QuadIdeal& i, const QuadIdeal& j) {
  if (i.d != order.d() || j.d != order.d()) {
    throw InvalidIdeal("ideals belong to different quadratic orders");
  }
  const auto [i1, i2] = ideal_basis(i);
  const auto [j1, j2] = ideal_basis(j);
  const QuadElement prods[] = {order.multiply(i1, j1), order.multiply(i1, j2),
                               order.multiply(i2, j1), order.multiply(i2, j2)};
  return ideal_from_generators(order, prods);
}

QuadIdeal ideal_pow(const QuadOrder& order, const QuadIdeal& i, unsigned exponent) {
  QuadIdeal out = unit_ideal(order);
  for (unsigned k = 0; k < exponent; ++k) out = ideal_mul(order, out, i);
  return out;
}

std::int64_t ideal_norm(const QuadIdeal& i) { return narrow(i128{i.scale} * i.scale * i.a); }

bool ideal_contains(const QuadOrder& order, const QuadIdeal& i, const QuadElement& e) {
  if (i.d != order.d()) return false;
  if (e.y % i.scale != 0 || e.x % i.scale != 0) return false;
  const i128 y = e.y / i.scale, x = e.x / i.scale;
  return mod128(x - y * i.b, i.a) == 0;
}

std::string format_ideal(const QuadOrder& order, const QuadIdeal& i) {
  const auto [g1, g2] = ideal_basis(i);
  return "<" + order.format(g1) + ", " + order.format(g2) + ">";
}

std::vector<QuadElement> elements_of_norm(const QuadOrder& order, std::int64_t norm) {
  std::vector<QuadElement> out;
  if (norm < 0) return out;
  if (norm == 0) return {QuadElement{0, 0}};
  // 4N = (2x + t*y)^2 + |D| y^2
  const i128 four_n = i128{4} * norm;
  const std::int64_t abs_d = -order.discriminant();
  const std::int64_t y_max = isqrt(narrow(four_n / abs_d));
  for (std::int64_t y = -y_max; y <= y_max; ++y) {
    const i128 rest = four_n - i128{abs_d} * y * y;
    if (rest < 0) continue;
    const std::int64_t s = isqrt(narrow(rest));
    if (i128{s} * s != rest) continue;
    for (std::int64_t sign : {1, -1}) {
      if (s == 0 && sign < 0) continue;
      const i128 twice_x = i128{sign} * s - i128{order.omega_trace()} * y;
      if (twice_x % 2 != 0) continue;
      out.push_back({narrow(twice_x / 2), y});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<QuadElement> associates(const QuadOrder& order, const QuadElement& alpha) {
  std::vector<QuadElement> out;
  for (const auto& u : order.units()) out.push_back(order.multiply(alpha, u));
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return canonical_key(l) < canonical_key(r); });
  return out;
}

bool is_irreducible(const QuadOrder& order, const QuadElement& alpha) {
  const std::int64_t n = order.norm(alpha);
  if (n == 0) throw DomainError("irreducibility is undefined for 0");
  if (n == 1) throw DomainError("irreducibility is undefined for units");
  std::vector<std::int64_t> divisors;
  for (std::int64_t m = 2; m * m <= n; ++m) {
    if (n % m != 0) continue;
    divisors.push_back(m);
    if (m != n / m) divisors.push_back(n / m);
  }
  std::sort(divisors.begin(), divisors.end());
  for (const std::int64_t m : divisors) {
    for (const auto& beta : elements_of_norm(order, m)) {
      // The cofactor has norm n/m > 1, so it is not a unit either.
      if (order.divide(alpha, beta)) return false;
    }
  }
  return true;
}

}  // namespace zerosum::quad
