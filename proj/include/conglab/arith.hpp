#pragma once

// Exact and modular integer arithmetic shared by the whole lab.
//
// Exact carriers are GMP's C++ classes; Residue is a value/modulus pair over
// uint64 with products taken through unsigned __int128, which is exact for
// every modulus this project uses (at most p^4 with p <= 997, well under
// 2^63).  Residues of different moduli never mix silently: any binary
// operation cross-checks the moduli and throws ModulusMismatch.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "conglab/error.hpp"

namespace conglab {

using Int = mpz_class;
using Rat = mpq_class;

// --- uint64 modular helpers -------------------------------------------------

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b; // a, b < m <= 2^63 so no wrap
  return s >= m ? s - m : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

uint64_t pow_mod_u64(uint64_t base, uint64_t exp, uint64_t m);

// Inverse of a mod m via extended gcd; throws NotInvertible.
uint64_t inv_mod_u64(uint64_t a, uint64_t m);

// x reduced into [0, m): works for negative x too.
uint64_t reduce_u64(const Int& x, uint64_t m);
uint64_t reduce_u64(long long x, uint64_t m);

// --- Residue ----------------------------------------------------------------

class Residue {
public:
  Residue() : v_(0), m_(1) {}
  Residue(uint64_t value, uint64_t modulus) : v_(value), m_(modulus) {
    if (m_ == 0) fail(ErrorCode::BadArgument, "modulus 0");
    if (v_ >= m_) v_ %= m_;
  }

  static Residue reduce(const Int& x, uint64_t modulus) {
    return Residue(reduce_u64(x, modulus), modulus);
  }
  static Residue reduce(long long x, uint64_t modulus) {
    return Residue(reduce_u64(x, modulus), modulus);
  }
  // num/den mod m; throws NotInvertible if den shares a factor with m.
  static Residue reduce(const Rat& q, uint64_t modulus);

  uint64_t value() const { return v_; }
  uint64_t modulus() const { return m_; }

  Residue& operator+=(const Residue& o) {
    check(o);
    v_ = add_mod(v_, o.v_, m_);
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    check(o);
    v_ = sub_mod(v_, o.v_, m_);
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    check(o);
    v_ = m_ == 1 ? 0 : mul_mod(v_, o.v_, m_);
    return *this;
  }
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

  Residue operator-() const { return Residue(v_ == 0 ? 0 : m_ - v_, m_); }

  Residue inverse() const;
  Residue pow(const Int& e) const;
  Residue pow(uint64_t e) const { return Residue(pow_mod_u64(v_, e, m_), m_); }

  bool operator==(const Residue& o) const {
    check(o);
    return v_ == o.v_;
  }
  bool operator!=(const Residue& o) const { return !(*this == o); }

  bool is_zero() const { return v_ == 0; }

private:
  void check(const Residue& o) const {
    if (m_ != o.m_) fail(ErrorCode::ModulusMismatch, "mixing moduli");
  }
  uint64_t v_;
  uint64_t m_;
};

inline Residue operator*(uint64_t a, const Residue& b) {
  return Residue::reduce(Int(a), b.modulus()) * b;
}

// mod_inverse / mod_pow over exact integers, result as Residue.
Residue mod_inverse(const Int& a, uint64_t m);
Residue mod_pow(const Int& base, const Int& exp, uint64_t m);

// --- primes -----------------------------------------------------------------

// Closed interval of odd primes with 2 and 3 excluded: the congruence suite
// ranges over p >= 5 (most statements need 1/2 and 1/3 to exist mod p).
struct PrimeRange {
  uint32_t lo = 5;
  uint32_t hi = 997;
};

std::vector<uint32_t> primes_in(uint32_t lo, uint32_t hi);
bool is_prime_u64(uint64_t n);

// --- binomials --------------------------------------------------------------

// C(n, k) for n >= 0; zero when k < 0 or k > n.
Int binomial_exact(const Int& n, unsigned long k);
// C(x, k) = x(x-1)...(x-k+1)/k! for arbitrary integer x (negative allowed).
Int binomial_generalized(const Int& x, unsigned long k);

// C(n, k) mod p^e for huge n and small k (k < p required, else KTooLarge):
// numerator product of k residues times the inverse of k!.
Residue binomial_mod(const Int& n, uint64_t k, uint64_t p, unsigned e);

// --- number-theoretic pieces ------------------------------------------------

// Fermat quotient q_a(p) = (a^{p-1} - 1)/p, returned mod p^e.  Internally
// computed mod p^{e+1} so the division by p is exact at full precision.
// Throws DivByP when p | a.
Residue fermat_quotient(const Int& a, uint64_t p, unsigned e);
// The untruncated integer quotient (used where whole rationals are assembled).
Int fermat_quotient_exact(const Int& a, uint64_t p);

// Tonelli-Shanks square root mod an odd prime; returns the canonical root in
// [0, (p-1)/2].  Throws NonResidue when no root exists.
Residue sqrt_mod_prime(const Residue& a);

// p = a^2 + 4 b^2 with a, b > 0 and a odd; exists iff p = 1 (mod 4), else
// WrongResidueClass.  Cornacchia descent seeded by sqrt(-1) mod p.
std::pair<uint64_t, uint64_t> represent_a2_plus_4b2(uint64_t p);

// phi(p^a) = p^{a-1} (p - 1).
uint64_t euler_totient_prime_power(uint64_t p, unsigned a);

// p^e as uint64 with an overflow guard.
uint64_t pow_u64_checked(uint64_t p, unsigned e);

// Batch inverses of 1..n mod m (all must be units; used for harmonic tables).
std::vector<uint64_t> inverses_upto(uint64_t n, uint64_t m);

// p-adic valuation of a non-zero rational (negative when p divides the
// denominator); ord_p(0) is an error.
long padic_valuation(const Rat& q, uint64_t p);

} // namespace conglab
