#include "qlfun/characters.hpp"

#include <numeric>

#include "qlfun/errors.hpp"

namespace qlfun {

namespace {

struct PrimePower {
  unsigned long p;
  unsigned e;
  unsigned long pe;
};

std::vector<PrimePower> factorize(unsigned long n) {
  std::vector<PrimePower> out;
  for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.e;
      pp.pe *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

unsigned long mul_mod(unsigned long a, unsigned long b, unsigned long m) {
  return static_cast<unsigned long>((__uint128_t)a * b % m);
}

unsigned long pow_mod(unsigned long b, unsigned long e, unsigned long m) {
  unsigned long r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.p);
  return out;
}

unsigned long smallest_primitive_root(unsigned long p, unsigned e) {
  unsigned long phi_p = p - 1;
  auto qs = prime_divisors(phi_p);
  unsigned long g = 2;
  for (;; ++g) {
    bool ok = true;
    for (unsigned long q : qs)
      if (pow_mod(g, phi_p / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) break;
  }
  if (e >= 2) {
    // lift to p^e: g works unless g^{p-1} = 1 mod p^2
    if (pow_mod(g, p - 1, p * p) == 1) g += p;
  }
  return g;
}

// One cyclic factor of the unit group of some prime-power component.
struct CyclicFactor {
  unsigned long component_modulus;              // p^e
  unsigned long order;                          // order of the factor
  std::vector<long> dlog;                       // residue mod p^e -> exponent, -1 off units
};

std::vector<CyclicFactor> unit_group_factors(unsigned long f) {
  std::vector<CyclicFactor> factors;
  for (const auto& pp : factorize(f)) {
    if (pp.p == 2) {
      if (pp.e == 1) continue;  // trivial group
      if (pp.e == 2) {
        CyclicFactor c{4, 2, std::vector<long>(4, -1)};
        c.dlog[1] = 0;
        c.dlog[3] = 1;
        factors.push_back(std::move(c));
        continue;
      }
      unsigned long m = pp.pe;
      unsigned long half_order = m / 4;  // order of 5
      CyclicFactor sign{m, 2, std::vector<long>(m, -1)};
      CyclicFactor five{m, half_order, std::vector<long>(m, -1)};
      unsigned long r = 1;
      for (unsigned long u = 0; u < half_order; ++u) {
        sign.dlog[r] = 0;
        five.dlog[r] = static_cast<long>(u);
        unsigned long neg = m - r;
        sign.dlog[neg] = 1;
        five.dlog[neg] = static_cast<long>(u);
        r = mul_mod(r, 5, m);
      }
      factors.push_back(std::move(sign));
      factors.push_back(std::move(five));
      continue;
    }
    unsigned long m = pp.pe;
    unsigned long order = m / pp.p * (pp.p - 1);
    unsigned long g = smallest_primitive_root(pp.p, pp.e);
    CyclicFactor c{m, order, std::vector<long>(m, -1)};
    unsigned long r = 1;
    for (unsigned long k = 0; k < order; ++k) {
      c.dlog[r] = static_cast<long>(k);
      r = mul_mod(r, g, m);
    }
    factors.push_back(std::move(c));
  }
  return factors;
}

std::vector<unsigned long> divisors_sorted(unsigned long n) {
  std::vector<unsigned long> d;
  for (unsigned long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

CharValue DirichletCharacter::eval(long long n) const {
  long long f = static_cast<long long>(modulus_);
  long long m = ((n % f) + f) % f;
  const auto& a = table_[static_cast<std::size_t>(m)];
  if (!a) return CharValue::zero_value();
  return CharValue::of(RootOfUnity{*a});
}

std::vector<DirichletCharacter> characters_mod(unsigned long f) {
  if (f == 0) throw domain_error("characters_mod: modulus must be >= 1");
  if (f > 2000000) throw domain_error("characters_mod: modulus too large for table construction");

  auto factors = unit_group_factors(f);
  unsigned long total = 1;
  for (const auto& c : factors) total *= c.order;

  // per-residue exponent vector on the generator list; empty where not a unit
  std::vector<std::optional<std::vector<long>>> dlogs(f);
  for (unsigned long a = 0; a < f; ++a) {
    if (std::gcd(a, f) != 1) continue;
    std::vector<long> e;
    e.reserve(factors.size());
    bool ok = true;
    for (const auto& c : factors) {
      long d = c.dlog[a % c.component_modulus];
      if (d < 0) {
        ok = false;
        break;
      }
      e.push_back(d);
    }
    if (ok) dlogs[a] = std::move(e);
  }

  std::vector<DirichletCharacter> out;
  out.reserve(total);
  for (unsigned long index = 0; index < total; ++index) {
    // lexicographic exponent tuple, first factor most significant
    std::vector<unsigned long> t(factors.size(), 0);
    unsigned long rest = index;
    for (std::size_t j = factors.size(); j-- > 0;) {
      t[j] = rest % factors[j].order;
      rest /= factors[j].order;
    }

    DirichletCharacter chi;
    chi.modulus_ = f;
    chi.index_ = index;
    chi.table_.resize(f);
    for (unsigned long a = 0; a < f; ++a) {
      if (!dlogs[a]) continue;
      mpq_class angle(0);
      for (std::size_t j = 0; j < factors.size(); ++j) {
        angle += mpq_class(static_cast<long>(t[j]) * (*dlogs[a])[j],
                           static_cast<long>(factors[j].order));
        angle.canonicalize();
      }
      chi.table_[a] = RootOfUnity::of(angle).angle;
    }

    unsigned long order = 1;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      unsigned long oj = factors[j].order / std::gcd(t[j], factors[j].order);
      order = std::lcm(order, oj);
    }
    chi.order_ = order;

    // conductor: smallest d | f with chi trivial on units congruent to 1 mod d
    for (unsigned long d : divisors_sorted(f)) {
      bool induced = true;
      for (unsigned long a = 1 % f; a < f; a += d) {
        if (a == 0 || std::gcd(a, f) != 1) continue;
        if (chi.table_[a] && *chi.table_[a] != 0) {
          induced = false;
          break;
        }
      }
      if (induced) {
        chi.conductor_ = d;
        break;
      }
    }
    out.push_back(std::move(chi));
  }
  return out;
}

DirichletCharacter character_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw domain_error("character spec must be \"modulus:index\", got: " + spec);
  unsigned long f = 0, idx = 0;
  try {
    f = std::stoul(spec.substr(0, colon));
    idx = std::stoul(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw domain_error("bad character spec: " + spec);
  }
  auto all = characters_mod(f);
  if (idx >= all.size())
    throw domain_error("character index out of range in spec " + spec + " (group has " +
                       std::to_string(all.size()) + " characters)");
  return all[idx];
}

}  // namespace qlfun
