#include "conglab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace conglab {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DivByP: return "DivByP";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::NonResidue: return "NonResidue";
    case ErrorCode::WrongResidueClass: return "WrongResidueClass";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::IndexPastOrder: return "IndexPastOrder";
    case ErrorCode::EvenIndex: return "EvenIndex";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NonIntegerSolution: return "NonIntegerSolution";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "Error";
}

uint64_t pow_mod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

uint64_t inv_mod_u64(uint64_t a, uint64_t m) {
  if (m == 1) return 0;
  a %= m;
  // extended Euclid on (a, m); track only the coefficient of a.
  int64_t t = 0, newt = 1;
  uint64_t r = m, newr = a;
  while (newr != 0) {
    uint64_t q = r / newr;
    int64_t tmpt = t - static_cast<int64_t>(q) * newt;
    t = newt;
    newt = tmpt;
    uint64_t tmpr = r - q * newr;
    r = newr;
    newr = tmpr;
  }
  if (r != 1)
    fail(ErrorCode::NotInvertible,
         std::to_string(a) + " mod " + std::to_string(m));
  return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(m)) : static_cast<uint64_t>(t);
}

uint64_t reduce_u64(const Int& x, uint64_t m) {
  if (m == 1) return 0;
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m); // floor remainder: in [0, m)
  return r.get_ui();
}

uint64_t reduce_u64(long long x, uint64_t m) {
  if (m == 1) return 0;
  long long r = x % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<uint64_t>(r);
}

Residue Residue::reduce(const Rat& q, uint64_t modulus) {
  Residue num = Residue::reduce(Int(q.get_num()), modulus);
  Residue den = Residue::reduce(Int(q.get_den()), modulus);
  return num * den.inverse();
}

Residue Residue::inverse() const {
  return Residue(inv_mod_u64(v_, m_), m_);
}

Residue Residue::pow(const Int& e) const {
  if (sgn(e) < 0) return inverse().pow(Int(-e));
  if (m_ == 1) return Residue(0, 1);
  Residue r(1, m_), b = *this;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r *= b;
    b *= b;
  }
  return r;
}

Residue mod_inverse(const Int& a, uint64_t m) {
  return Residue::reduce(a, m).inverse();
}

Residue mod_pow(const Int& base, const Int& exp, uint64_t m) {
  return Residue::reduce(base, m).pow(exp);
}

std::vector<uint32_t> primes_in(uint32_t lo, uint32_t hi) {
  std::vector<uint32_t> out;
  if (hi < 5 || hi < lo) return out;
  lo = std::max<uint32_t>(lo, 5);
  std::vector<bool> composite(hi + 1, false);
  for (uint32_t i = 2; static_cast<uint64_t>(i) * i <= hi; ++i)
    if (!composite[i])
      for (uint64_t j = static_cast<uint64_t>(i) * i; j <= hi; j += i)
        composite[j] = true;
  for (uint32_t n = lo; n <= hi; ++n)
    if (!composite[n] && n >= 5) out.push_back(n);
  return out;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (uint64_t d = 11; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Int binomial_exact(const Int& n, unsigned long k) {
  if (sgn(n) < 0) fail(ErrorCode::BadArgument, "binomial_exact needs n >= 0");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Int binomial_generalized(const Int& x, unsigned long k) {
  // product formula keeps negative upper arguments exact: C(-2, 3) = -4.
  Int num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= x - static_cast<long>(i);
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
  if (sgn(r) != 0) fail(ErrorCode::InexactDivision, "binomial_generalized");
  return q;
}

Residue binomial_mod(const Int& n, uint64_t k, uint64_t p, unsigned e) {
  if (k >= p)
    fail(ErrorCode::KTooLarge,
         "binomial_mod needs k < p (k=" + std::to_string(k) + ", p=" + std::to_string(p) + ")");
  uint64_t m = pow_u64_checked(p, e);
  Residue num(1, m), den(1, m);
  for (uint64_t i = 0; i < k; ++i) {
    num *= Residue::reduce(Int(n - static_cast<unsigned long>(i)), m);
    den *= Residue(reduce_u64(static_cast<long long>(i + 1), m), m);
  }
  return num * den.inverse();
}

Residue fermat_quotient(const Int& a, uint64_t p, unsigned e) {
  if (mpz_divisible_ui_p(a.get_mpz_t(), p))
    fail(ErrorCode::DivByP, "fermat_quotient base divisible by p");
  uint64_t big = pow_u64_checked(p, e + 1);
  uint64_t t = mod_pow(a, Int(static_cast<unsigned long>(p - 1)), big).value();
  // Fermat: t = 1 (mod p), so (t - 1)/p is exact and correct mod p^e.
  uint64_t diff = t >= 1 ? t - 1 : big - 1;
  return Residue((diff / p) % pow_u64_checked(p, e), pow_u64_checked(p, e));
}

Int fermat_quotient_exact(const Int& a, uint64_t p) {
  if (mpz_divisible_ui_p(a.get_mpz_t(), p))
    fail(ErrorCode::DivByP, "fermat_quotient base divisible by p");
  Int t;
  mpz_pow_ui(t.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p - 1));
  t -= 1;
  Int q;
  mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), p);
  return q;
}

Residue sqrt_mod_prime(const Residue& a) {
  uint64_t p = a.modulus();
  if (p == 2 || !is_prime_u64(p)) fail(ErrorCode::BadArgument, "modulus must be an odd prime");
  uint64_t x = a.value();
  if (x == 0) return Residue(0, p);
  if (pow_mod_u64(x, (p - 1) / 2, p) != 1)
    fail(ErrorCode::NonResidue, std::to_string(x) + " mod " + std::to_string(p));
  uint64_t r;
  if (p % 4 == 3) {
    r = pow_mod_u64(x, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks: p - 1 = q 2^s with q odd.
    uint64_t q = p - 1, s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    uint64_t z = 2;
    while (pow_mod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    uint64_t m = s;
    uint64_t c = pow_mod_u64(z, q, p);
    uint64_t t = pow_mod_u64(x, q, p);
    r = pow_mod_u64(x, (q + 1) / 2, p);
    while (t != 1) {
      uint64_t i = 0, tt = t;
      while (tt != 1) { tt = mul_mod(tt, tt, p); ++i; }
      uint64_t b = c;
      for (uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b, p);
    }
  }
  if (r > p - r) r = p - r; // canonical root in [0, (p-1)/2]
  return Residue(r, p);
}

std::pair<uint64_t, uint64_t> represent_a2_plus_4b2(uint64_t p) {
  if (!is_prime_u64(p) || p % 4 != 1)
    fail(ErrorCode::WrongResidueClass,
         std::to_string(p) + " is not a prime = 1 (mod 4)");
  // Cornacchia for p = x^2 + y^2: Euclidean descent from a root of -1.
  uint64_t x0 = sqrt_mod_prime(Residue(p - 1, p)).value();
  uint64_t a = p, b = x0;
  while (b * b > p) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  uint64_t x = b;
  uint64_t y2 = p - x * x;
  uint64_t y = static_cast<uint64_t>(std::sqrt(static_cast<double>(y2)));
  while (y * y < y2) ++y;
  while (y * y > y2) --y;
  if (y * y != y2) fail(ErrorCode::NonIntegerSolution, "two-square descent");
  // exactly one of x, y is odd since p = 1 (mod 4)
  uint64_t odd = (x & 1) ? x : y;
  uint64_t even = (x & 1) ? y : x;
  return {odd, even / 2};
}

uint64_t euler_totient_prime_power(uint64_t p, unsigned a) {
  if (a == 0) fail(ErrorCode::BadArgument, "totient exponent must be positive");
  uint64_t r = p - 1;
  for (unsigned i = 1; i < a; ++i) r *= p;
  return r;
}

uint64_t pow_u64_checked(uint64_t p, unsigned e) {
  uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / 2 / p) fail(ErrorCode::TooLarge, "modulus overflow");
    r *= p;
  }
  return r;
}

std::vector<uint64_t> inverses_upto(uint64_t n, uint64_t m) {
  // one extended-gcd plus 2n multiplications (prefix-product trick)
  std::vector<uint64_t> prefix(n + 1);
  prefix[0] = 1 % m;
  for (uint64_t i = 1; i <= n; ++i) prefix[i] = mul_mod(prefix[i - 1], i % m, m);
  uint64_t run = inv_mod_u64(prefix[n], m);
  std::vector<uint64_t> inv(n + 1, 0);
  for (uint64_t i = n; i >= 1; --i) {
    inv[i] = mul_mod(run, prefix[i - 1], m);
    run = mul_mod(run, i % m, m);
  }
  return inv;
}

long padic_valuation(const Rat& q, uint64_t p) {
  if (sgn(q) == 0) fail(ErrorCode::BadArgument, "ord_p(0) undefined");
  long v = 0;
  Int n = q.get_num();
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  Int d = q.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
    --v;
  }
  return v;
}

} // namespace conglab
