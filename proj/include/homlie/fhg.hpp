#pragma once

// Finite Hom-groups given by Cayley tables. Elements are 0..m-1.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homlie {

using Table = std::vector<std::vector<std::size_t>>;
using Permutation = std::vector<std::size_t>;

class FiniteHomGroup {
 public:
  /// Validates ranges, that twist is a bijection and that unit is a
  /// Hom-unit (x <> u = u <> x = twist(x)). Throws not_a_group.
  FiniteHomGroup(Table table, Permutation twist, std::size_t unit);

  std::size_t order() const noexcept { return table_.size(); }
  const Table& table() const noexcept { return table_; }
  const Permutation& twist() const noexcept { return twist_; }
  std::size_t unit() const noexcept { return unit_; }

  std::size_t product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t phi(std::size_t a) const { return twist_[a]; }
  std::size_t phi_inv(std::size_t a) const { return twist_inv_[a]; }

  /// All y with x <> y = y <> x = unit.
  std::vector<std::size_t> inverses(std::size_t x) const;
  /// The unique inverse; throws not_a_group if there is none or several.
  std::size_t inverse(std::size_t x) const;

 private:
  Table table_;
  Permutation twist_;
  Permutation twist_inv_;
  std::size_t unit_;
};

struct GroupVerdict {
  std::string name;
  bool pass = true;
  std::vector<std::size_t> witness;  // lexicographically first failing tuple
};

struct GroupAxiomReport {
  GroupVerdict twist_multiplicative;  // (i)   phi(x<>y) = phi(x)<>phi(y)
  GroupVerdict hom_associative;       // (ii)  phi(x)<>(y<>z) = (x<>y)<>phi(z)
  GroupVerdict hom_unit;              // (iii) unique u with x<>u = u<>x = phi(x)
  GroupVerdict invertible;            // (iv)  every x has an inverse
  GroupVerdict unit_fixed;            // phi(e) = e
  GroupVerdict unique_inverse;        // exactly one inverse per element
  GroupVerdict inverse_antihom;       // (x<>y)^-1 = y^-1 <> x^-1

  std::vector<const GroupVerdict*> all() const {
    return {&twist_multiplicative, &hom_associative, &hom_unit, &invertible,
            &unit_fixed, &unique_inverse, &inverse_antihom};
  }
  bool all_pass() const;
};

/// Exhaustive check over all pairs / triples.
GroupAxiomReport check_axioms(const FiniteHomGroup& h);

/// Checks that cayley is a group table and phi an automorphism of it, then
/// builds a<>b = phi(a b) with the group identity as Hom-unit. Throws
/// not_a_group / not_automorphism naming the first witness.
FiniteHomGroup from_automorphism(const Table& cayley, const Permutation& phi);

struct WeakHomReport {
  GroupVerdict unit_preserving;  // f(e_G) = e_H
  GroupVerdict weak;             // unit and psi f(x<>y) = f(phi x) <> f(phi y)
  GroupVerdict hom;              // unit and f(x<>y) = f(x) <> f(y)
  GroupVerdict commutes;         // psi f = f phi
};
/// Throws dimension_mismatch if f is not a total map G -> H.
WeakHomReport check_weak_hom(const std::vector<std::size_t>& f, const FiniteHomGroup& g, const FiniteHomGroup& h);

/// Ad~(a, b) = phi^-1(a<>b) <> a^-1
std::size_t tilde_ad(const FiniteHomGroup& h, std::size_t a, std::size_t b);

struct TildeAdReport {
  GroupVerdict unit_action;  // Ad~(e, x) = phi(x)
  GroupVerdict composition;  // Ad~(a<>b, x) = Ad~(phi a, phi^-1 Ad~(phi b, x))
  bool all_pass() const { return unit_action.pass && composition.pass; }
};
/// Requires check_axioms to pass (not_a_group otherwise).
TildeAdReport tilde_ad_check(const FiniteHomGroup& h);

namespace groups {
Table cyclic(std::size_t n);
/// S3 as permutations of {0,1,2}, listed lexicographically; index 0 is the identity.
Table symmetric3();
/// D4 with r^i s^j at index i + 4j.
Table dihedral4();
/// x -> u x mod n
Permutation cyclic_power(std::size_t n, std::size_t u);
/// x -> g x g^-1
Permutation conjugation(const Table& cayley, std::size_t g);
/// r -> r, s -> r s
Permutation dihedral4_outer();
}  // namespace groups

}  // namespace homlie
