#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlfun/cyclotomic.hpp"

namespace qlfun {

// chi(n): either exactly zero (n not coprime to the modulus) or an exact
// root of unity.
struct CharValue {
  bool zero = true;
  RootOfUnity root;

  static CharValue zero_value() { return CharValue{}; }
  static CharValue of(const RootOfUnity& r) { return CharValue{false, r}; }

  CycloValue cyclo() const { return zero ? CycloValue::zero() : CycloValue::root(root); }
  Complex realize(mpfr_prec_t prec) const {
    return zero ? Complex::zero(prec) : root.realize(prec);
  }
  bool is_one() const { return !zero && root.is_one(); }
};

// Dirichlet character mod f, represented by its exact value table (rational
// angles) plus conductor/primitivity data computed at construction.
//
// Canonical indexing: the unit group is written on a fixed generator list —
// the 2-part first (3 for modulus 4; -1 then 5 for 2^k, k >= 3), then one
// smallest primitive root per odd prime power, primes ascending.  Characters
// are ordered lexicographically by their exponent tuple on that list, so
// index 0 is the principal character and "f:index" names a character
// reproducibly.  This is the grammar the CLI accepts.
class DirichletCharacter {
 public:
  unsigned long modulus() const { return modulus_; }
  std::size_t index() const { return index_; }
  unsigned long conductor() const { return conductor_; }
  bool primitive() const { return conductor_ == modulus_; }
  bool principal() const { return index_ == 0; }
  unsigned long order() const { return order_; }
  bool real_valued() const { return order_ <= 2; }

  CharValue eval(long long n) const;
  std::string spec_string() const {
    return std::to_string(modulus_) + ":" + std::to_string(index_);
  }

  // angle of chi(a) for a in [0, f), or nullopt where chi vanishes
  const std::vector<std::optional<mpq_class>>& angle_table() const { return table_; }

 private:
  friend std::vector<DirichletCharacter> characters_mod(unsigned long f);

  unsigned long modulus_ = 1;
  std::size_t index_ = 0;
  unsigned long conductor_ = 1;
  unsigned long order_ = 1;
  std::vector<std::optional<mpq_class>> table_;
};

// The full dual group mod f in canonical order; phi(f) members.
std::vector<DirichletCharacter> characters_mod(unsigned long f);

// Parses "f:index" against the canonical order.
DirichletCharacter character_from_spec(const std::string& spec);

inline std::pair<unsigned long, bool> conductor_of(const DirichletCharacter& chi) {
  return {chi.conductor(), chi.primitive()};
}

}  // namespace qlfun
