#include "homlie/fhg.hpp"

#include <algorithm>
#include <array>

#include "homlie/detail/parallel.hpp"
#include "homlie/error.hpp"

namespace homlie {

namespace {

using Tuple = std::vector<std::size_t>;

std::string show(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

// First (x, y) in lexicographic order with !ok(x, y).
template <class Ok>
std::optional<Tuple> first_bad_pair(std::size_t m, Ok ok) {
  return detail::first_hit<Tuple>(m, [&](std::size_t x) -> std::optional<Tuple> {
    for (std::size_t y = 0; y < m; ++y)
      if (!ok(x, y)) return Tuple{x, y};
    return std::nullopt;
  });
}

template <class Ok>
std::optional<Tuple> first_bad_triple(std::size_t m, Ok ok) {
  return detail::first_hit<Tuple>(m, [&](std::size_t x) -> std::optional<Tuple> {
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (!ok(x, y, z)) return Tuple{x, y, z};
    return std::nullopt;
  });
}

template <class Ok>
std::optional<Tuple> first_bad_element(std::size_t m, Ok ok) {
  for (std::size_t x = 0; x < m; ++x)
    if (!ok(x)) return Tuple{x};
  return std::nullopt;
}

GroupVerdict verdict(std::string name, std::optional<Tuple> bad) {
  GroupVerdict v{std::move(name), !bad.has_value(), {}};
  if (bad) v.witness = std::move(*bad);
  return v;
}

void check_square(const Table& t, const char* what) {
  const std::size_t m = t.size();
  if (m == 0) fail(ErrorCode::not_a_group, std::string(what) + " is empty");
  for (const auto& row : t) {
    if (row.size() != m) fail(ErrorCode::not_a_group, std::string(what) + " is not square");
    for (std::size_t v : row)
      if (v >= m) fail(ErrorCode::not_a_group, std::string(what) + " entry out of range");
  }
}

std::optional<Permutation> invert_permutation(const Permutation& p) {
  Permutation inv(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= p.size() || inv[p[i]] != p.size()) return std::nullopt;
    inv[p[i]] = i;
  }
  return inv;
}

}  // namespace

FiniteHomGroup::FiniteHomGroup(Table table, Permutation twist, std::size_t unit)
    : table_(std::move(table)), twist_(std::move(twist)), unit_(unit) {
  check_square(table_, "product table");
  const std::size_t m = table_.size();
  if (twist_.size() != m) fail(ErrorCode::not_a_group, "twist length differs from the order");
  auto inv = invert_permutation(twist_);
  if (!inv) fail(ErrorCode::not_a_group, "twist is not a bijection");
  twist_inv_ = std::move(*inv);
  if (unit_ >= m) fail(ErrorCode::not_a_group, "unit out of range");
  for (std::size_t x = 0; x < m; ++x)
    if (table_[x][unit_] != twist_[x] || table_[unit_][x] != twist_[x])
      fail(ErrorCode::not_a_group, "unit is not a Hom-unit at x=" + std::to_string(x));
}

std::vector<std::size_t> FiniteHomGroup::inverses(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < order(); ++y)
    if (table_[x][y] == unit_ && table_[y][x] == unit_) out.push_back(y);
  return out;
}

std::size_t FiniteHomGroup::inverse(std::size_t x) const {
  const auto ys = inverses(x);
  if (ys.size() != 1) fail(ErrorCode::not_a_group, "element " + std::to_string(x) + " has no unique inverse");
  return ys.front();
}

bool GroupAxiomReport::all_pass() const {
  const auto verdicts = all();
  return std::all_of(verdicts.begin(), verdicts.end(), [](const GroupVerdict* v) { return v->pass; });
}

GroupAxiomReport check_axioms(const FiniteHomGroup& h) {
  const std::size_t m = h.order();
  const std::size_t e = h.unit();
  GroupAxiomReport r;
  r.twist_multiplicative = verdict("twist_multiplicative", first_bad_pair(m, [&](std::size_t x, std::size_t y) {
                                     return h.phi(h.product(x, y)) == h.product(h.phi(x), h.phi(y));
                                   }));
  r.hom_associative = verdict("hom_associative", first_bad_triple(m, [&](std::size_t x, std::size_t y, std::size_t z) {
                                return h.product(h.phi(x), h.product(y, z)) == h.product(h.product(x, y), h.phi(z));
                              }));
  // The stored unit is validated on construction; only uniqueness is open.
  r.hom_unit = verdict("hom_unit", first_bad_element(m, [&](std::size_t u) {
                         if (u == e) return true;
                         for (std::size_t x = 0; x < m; ++x)
                           if (h.product(x, u) != h.phi(x) || h.product(u, x) != h.phi(x)) return true;
                         return false;
                       }));
  std::vector<std::vector<std::size_t>> inv(m);
  for (std::size_t x = 0; x < m; ++x) inv[x] = h.inverses(x);
  r.invertible = verdict("invertible", first_bad_element(m, [&](std::size_t x) { return !inv[x].empty(); }));
  r.unit_fixed = verdict("unit_fixed", h.phi(e) == e ? std::nullopt : std::optional<Tuple>(Tuple{e}));
  r.unique_inverse = verdict("unique_inverse", first_bad_element(m, [&](std::size_t x) { return inv[x].size() == 1; }));
  r.inverse_antihom = verdict("inverse_antihom", first_bad_pair(m, [&](std::size_t x, std::size_t y) {
                                const std::size_t xy = h.product(x, y);
                                if (inv[x].size() != 1 || inv[y].size() != 1 || inv[xy].size() != 1) return false;
                                return inv[xy][0] == h.product(inv[y][0], inv[x][0]);
                              }));
  return r;
}

FiniteHomGroup from_automorphism(const Table& cayley, const Permutation& phi) {
  check_square(cayley, "group table");
  const std::size_t m = cayley.size();
  auto mul = [&](std::size_t a, std::size_t b) { return cayley[a][b]; };

  if (auto bad = first_bad_triple(m, [&](std::size_t a, std::size_t b, std::size_t c) {
        return mul(mul(a, b), c) == mul(a, mul(b, c));
      }))
    fail(ErrorCode::not_a_group, "not associative at " + show(*bad));
  std::optional<std::size_t> identity;
  for (std::size_t u = 0; u < m && !identity; ++u) {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x) ok = mul(u, x) == x && mul(x, u) == x;
    if (ok) identity = u;
  }
  if (!identity) fail(ErrorCode::not_a_group, "no identity element");
  if (auto bad = first_bad_element(m, [&](std::size_t x) {
        for (std::size_t y = 0; y < m; ++y)
          if (mul(x, y) == *identity && mul(y, x) == *identity) return true;
        return false;
      }))
    fail(ErrorCode::not_a_group, "no inverse for " + show(*bad));

  if (phi.size() != m || !invert_permutation(phi)) fail(ErrorCode::not_automorphism, "phi is not a bijection");
  if (auto bad = first_bad_pair(m, [&](std::size_t a, std::size_t b) { return phi[mul(a, b)] == mul(phi[a], phi[b]); }))
    fail(ErrorCode::not_automorphism, "phi(a b) != phi(a) phi(b) at " + show(*bad));

  Table t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a][b] = phi[mul(a, b)];
  return FiniteHomGroup(std::move(t), phi, *identity);
}

WeakHomReport check_weak_hom(const std::vector<std::size_t>& f, const FiniteHomGroup& g, const FiniteHomGroup& h) {
  if (f.size() != g.order()) fail(ErrorCode::dimension_mismatch, "map must have one image per element");
  for (std::size_t v : f)
    if (v >= h.order()) fail(ErrorCode::dimension_mismatch, "map image out of range");
  const std::size_t m = g.order();
  WeakHomReport r;
  const bool unit_ok = f[g.unit()] == h.unit();
  r.unit_preserving = verdict("unit_preserving", unit_ok ? std::nullopt : std::optional<Tuple>(Tuple{g.unit()}));

  auto pairs = [&](auto ok) -> std::optional<Tuple> {
    if (!unit_ok) return Tuple{g.unit()};
    return first_bad_pair(m, ok);
  };
  r.weak = verdict("weak_hom", pairs([&](std::size_t x, std::size_t y) {
                     return h.phi(f[g.product(x, y)]) == h.product(f[g.phi(x)], f[g.phi(y)]);
                   }));
  r.hom = verdict("hom", pairs([&](std::size_t x, std::size_t y) {
                    return f[g.product(x, y)] == h.product(f[x], f[y]);
                  }));
  r.commutes = verdict("commutes", first_bad_element(m, [&](std::size_t x) { return h.phi(f[x]) == f[g.phi(x)]; }));
  return r;
}

std::size_t tilde_ad(const FiniteHomGroup& h, std::size_t a, std::size_t b) {
  return h.product(h.phi_inv(h.product(a, b)), h.inverse(a));
}

TildeAdReport tilde_ad_check(const FiniteHomGroup& h) {
  if (!check_axioms(h).all_pass()) fail(ErrorCode::not_a_group, "Hom-group axioms fail");
  const std::size_t m = h.order();
  // Tabulate once; tilde_ad itself searches for inverses.
  Table ad(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) ad[a][b] = tilde_ad(h, a, b);
  TildeAdReport r;
  r.unit_action =
      verdict("unit_action", first_bad_element(m, [&](std::size_t x) { return ad[h.unit()][x] == h.phi(x); }));
  r.composition = verdict("composition", first_bad_triple(m, [&](std::size_t a, std::size_t b, std::size_t x) {
                            return ad[h.product(a, b)][x] == ad[h.phi(a)][h.phi_inv(ad[h.phi(b)][x])];
                          }));
  return r;
}

namespace groups {

Table cyclic(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

Table symmetric3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<std::size_t, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (a b)(i) = a(b(i))
      t[a][b] = index(c);
    }
  return t;
}

Table dihedral4() {
  Table t(8, std::vector<std::size_t>(8));
  // (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b + d}
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t a = x % 4, b = x / 4, c = y % 4, d = y / 4;
      const std::size_t rot = (b == 0 ? a + c : a + 4 - c) % 4;
      t[x][y] = rot + 4 * ((b + d) % 2);
    }
  return t;
}

Permutation cyclic_power(std::size_t n, std::size_t u) {
  Permutation p(n);
  for (std::size_t x = 0; x < n; ++x) p[x] = (u * x) % n;
  return p;
}

Permutation conjugation(const Table& cayley, std::size_t g) {
  const std::size_t m = cayley.size();
  // g y is the identity iff (g y) g = g
  std::size_t g_inv = m;
  for (std::size_t y = 0; y < m && g_inv == m; ++y)
    if (cayley[cayley[g][y]][g] == g) g_inv = y;
  if (g_inv == m) fail(ErrorCode::not_a_group, "element has no inverse");
  Permutation p(m);
  for (std::size_t x = 0; x < m; ++x) p[x] = cayley[cayley[g][x]][g_inv];
  return p;
}

Permutation dihedral4_outer() {
  Permutation p(8);
  for (std::size_t i = 0; i < 4; ++i) {
    p[i] = i;
    p[i + 4] = (i + 1) % 4 + 4;
  }
  return p;
}

}  // namespace groups

}  // namespace homlie
