#include "conglab/sequences.hpp"

#include <algorithm>

namespace conglab::seq {

// --- Eulerian triangle ------------------------------------------------------

std::vector<Int> eulerian_row(int n) {
  if (n < 1 || n > kMaxEulerianRow)
    fail(ErrorCode::TooLarge, "eulerian_row n out of range");
  std::vector<Int> row{1};
  for (int r = 2; r <= n; ++r) {
    std::vector<Int> next(static_cast<size_t>(r));
    for (int m = 0; m < r; ++m) {
      Int v = 0;
      if (m >= 1) v += (r - m) * row[static_cast<size_t>(m - 1)];
      if (m < r - 1) v += (m + 1) * row[static_cast<size_t>(m)];
      next[static_cast<size_t>(m)] = v;
    }
    row = std::move(next);
  }
  return row;
}

Int eulerian_closed(int n, int m) {
  if (n < 1 || m < 0 || m > n - 1) fail(ErrorCode::BadArgument, "eulerian_closed index");
  Int acc = 0;
  for (int k = 0; k <= m + 1; ++k) {
    Int base = m + 1 - k;
    Int power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    Int term = binomial_exact(Int(n + 1), static_cast<unsigned long>(k)) * power;
    if (k & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

Residue eulerian_mod(const Int& n, uint64_t m, uint64_t p, unsigned e) {
  if (m + 1 >= p) fail(ErrorCode::KTooLarge, "eulerian_mod needs m+1 < p");
  uint64_t mod = pow_u64_checked(p, e);
  Residue acc(0, mod);
  for (uint64_t k = 0; k <= m + 1; ++k) {
    Residue term = binomial_mod(n + 1, k, p, e) *
                   Residue(m + 1 - k, mod).pow(n);
    if (k & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

std::vector<uint64_t> eulerian_row_mod(uint64_t n, uint64_t modulus) {
  if (n < 1 || n > 100000) fail(ErrorCode::TooLarge, "eulerian_row_mod n out of range");
  std::vector<uint64_t> row{1 % modulus};
  for (uint64_t r = 2; r <= n; ++r) {
    std::vector<uint64_t> next(r);
    for (uint64_t m = 0; m < r; ++m) {
      uint64_t v = 0;
      if (m >= 1) v = mul_mod((r - m) % modulus, row[m - 1], modulus);
      if (m < r - 1)
        v = add_mod(v, mul_mod((m + 1) % modulus, row[m], modulus), modulus);
      next[m] = v;
    }
    row = std::move(next);
  }
  return row;
}

Int multiset_word_count(int n, int i) {
  Int num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(i) * n);
  Int ifac;
  mpz_fac_ui(ifac.get_mpz_t(), static_cast<unsigned long>(i));
  Int den;
  mpz_pow_ui(den.get_mpz_t(), ifac.get_mpz_t(), static_cast<unsigned long>(n));
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::vector<Int> generalized_eulerian_row(int n, int i) {
  if (n < 1 || i < 1) fail(ErrorCode::BadArgument, "generalized row needs n, i >= 1");
  Int weight = multiset_word_count(n, i);
  if (weight > kMaxGeneralizedRowWeight)
    fail(ErrorCode::TooLarge, "generalized row weight above cap");
  const long M = static_cast<long>(i) * (n - 1); // top descent count
  const long in = static_cast<long>(i) * n;
  std::vector<Int> row(static_cast<size_t>(M) + 1);
  // back-substitute from x = in - M (only E_M survives) up to x = in
  for (long s = M; s >= 0; --s) {
    Int x = in - s;
    Int lhs;
    {
      Int c = binomial_generalized(x, static_cast<unsigned long>(i));
      mpz_pow_ui(lhs.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n));
    }
    for (long m = s + 1; m <= M; ++m)
      lhs -= row[static_cast<size_t>(m)] *
             binomial_generalized(x + m, static_cast<unsigned long>(in));
    row[static_cast<size_t>(s)] = lhs; // diagonal coefficient C(in,in) = 1
  }
  Int sum = 0;
  for (const Int& v : row) {
    if (sgn(v) < 0) fail(ErrorCode::NonIntegerSolution, "negative multiset count");
    sum += v;
  }
  if (sum != weight) fail(ErrorCode::NonIntegerSolution, "row sum != word count");
  return row;
}

Int even_ascent_count(int n) {
  std::vector<Int> row = eulerian_row(n);
  Int acc = 0;
  for (size_t m = 0; m < row.size(); m += 2) acc += row[m];
  return acc;
}

// --- zigzag family ----------------------------------------------------------

std::vector<Int> zigzag(int N) {
  if (N < 0 || N > kMaxZigzagExact) fail(ErrorCode::TooLarge, "zigzag N out of range");
  std::vector<Int> diag(static_cast<size_t>(N) + 1);
  std::vector<Int> prev{1}; // boustrophedon row 0
  diag[0] = 1;
  std::vector<Int> cur;
  for (int n = 1; n <= N; ++n) {
    cur.assign(static_cast<size_t>(n) + 1, Int(0));
    for (int k = 1; k <= n; ++k)
      cur[static_cast<size_t>(k)] =
          cur[static_cast<size_t>(k - 1)] + prev[static_cast<size_t>(n - k)];
    diag[static_cast<size_t>(n)] = cur[static_cast<size_t>(n)];
    std::swap(prev, cur);
  }
  return diag;
}

std::vector<uint64_t> zigzag_mod(int N, uint64_t modulus) {
  if (N < 0 || N > kMaxZigzagMod) fail(ErrorCode::TooLarge, "zigzag_mod N out of range");
  if (modulus == 0) fail(ErrorCode::BadArgument, "modulus 0");
  std::vector<uint64_t> diag(static_cast<size_t>(N) + 1);
  std::vector<uint64_t> prev{1 % modulus};
  diag[0] = 1 % modulus;
  std::vector<uint64_t> cur;
  for (int n = 1; n <= N; ++n) {
    cur.assign(static_cast<size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k)
      cur[static_cast<size_t>(k)] =
          add_mod(cur[static_cast<size_t>(k - 1)], prev[static_cast<size_t>(n - k)], modulus);
    diag[static_cast<size_t>(n)] = cur[static_cast<size_t>(n)];
    std::swap(prev, cur);
  }
  return diag;
}

Int euler_number(int n) {
  if (n < 0) fail(ErrorCode::BadArgument, "euler_number n >= 0");
  if (n & 1) return 0;
  Int z = zigzag(n)[static_cast<size_t>(n)];
  return (n / 2) % 2 ? -z : z;
}

Int generalized_euler(int n) {
  if (n < 0) fail(ErrorCode::BadArgument, "generalized_euler n >= 0");
  if (n % 2 == 0) return euler_number(n);
  // odd n: alternating Eulerian row sum (the defining form; the signed-zigzag
  // shortcut (-1)^{n/2} z_n is an identity asserted in tests)
  std::vector<Int> row = eulerian_row(n);
  Int acc = 0;
  for (size_t m = 0; m < row.size(); ++m) {
    if (m & 1)
      acc -= row[m];
    else
      acc += row[m];
  }
  return acc;
}

Int tangent_number(int n) {
  if (n < 1 || n % 2 == 0) fail(ErrorCode::EvenIndex, "tangent_number needs odd n");
  return zigzag(n)[static_cast<size_t>(n)];
}

Int secant_number(int n) {
  if (n < 0 || n % 2 == 1) fail(ErrorCode::EvenIndex, "secant_number needs even n");
  return zigzag(n)[static_cast<size_t>(n)];
}

Int genocchi_number(int n) {
  if (n < 1) fail(ErrorCode::BadArgument, "genocchi_number n >= 1");
  if (n == 1) return 1;
  if (n & 1) return 0;
  // G_{2m} = (-1)^m m T_{2m-1} / 4^{m-1}
  long m = n / 2;
  Int t = zigzag(n - 1)[static_cast<size_t>(n - 1)];
  t *= m;
  Int four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(m - 1));
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), four_pow.get_mpz_t());
  if (sgn(r) != 0) fail(ErrorCode::InexactDivision, "genocchi tangent relation");
  return (m % 2) ? -q : q;
}

uint64_t euler_number_mod(const std::vector<uint64_t>& z, uint64_t modulus, long n) {
  if (n & 1) return 0;
  uint64_t v = z.at(static_cast<size_t>(n));
  return ((n / 2) % 2) ? (v == 0 ? 0 : modulus - v) : v;
}

uint64_t generalized_euler_mod(const std::vector<uint64_t>& z, uint64_t modulus, long n) {
  uint64_t v = z.at(static_cast<size_t>(n));
  return ((n / 2) % 2) ? (v == 0 ? 0 : modulus - v) : v;
}

uint64_t genocchi_number_mod(const std::vector<uint64_t>& z, uint64_t modulus, long n) {
  if (n == 1) return 1 % modulus;
  if (n & 1) return 0;
  long m = n / 2;
  uint64_t t = z.at(static_cast<size_t>(n - 1));
  t = mul_mod(t, reduce_u64(static_cast<long long>(m), modulus), modulus);
  uint64_t inv4 = inv_mod_u64(4 % modulus, modulus); // modulus odd in all uses
  uint64_t inv4pow = pow_mod_u64(inv4, static_cast<uint64_t>(m - 1), modulus);
  t = mul_mod(t, inv4pow, modulus);
  return (m % 2) ? (t == 0 ? 0 : modulus - t) : t;
}

// --- Genocchi / Bernoulli ---------------------------------------------------

Residue divided_genocchi(long k, uint64_t p, unsigned e) {
  if (k < 1) fail(ErrorCode::BadArgument, "divided_genocchi k >= 1");
  if (k % static_cast<long>(p) == 0)
    fail(ErrorCode::NotInvertible, "divided_genocchi needs p not dividing k");
  uint64_t mod = pow_u64_checked(p, e);
  if (k == 1) return Residue(1, mod);
  if (k & 1) return Residue(0, mod);
  std::vector<uint64_t> z = zigzag_mod(static_cast<int>(k - 1), mod);
  uint64_t g = genocchi_number_mod(z, mod, k);
  return Residue(g, mod) * Residue::reduce(static_cast<long long>(k), mod).inverse();
}

Residue divided_bernoulli(long k, uint64_t p, unsigned e) {
  if (k < 1 || k % static_cast<long>(p) == 0)
    fail(ErrorCode::NotInvertible, "divided_bernoulli needs k >= 1 with p not dividing k");
  Residue b = bernoulli_mod(k, p, e);
  return b * Residue::reduce(static_cast<long long>(k), b.modulus()).inverse();
}

std::vector<Rat> bernoulli_exact(int N) {
  if (N < 0 || N > kMaxBernoulli) fail(ErrorCode::TooLarge, "bernoulli_exact N out of range");
  // B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k, B_0 = 1 (gives B_1 = -1/2)
  std::vector<Rat> B(static_cast<size_t>(N) + 1);
  B[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Rat acc(0);
    for (int k = 0; k < n; ++k)
      acc += Rat(binomial_exact(Int(n + 1), static_cast<unsigned long>(k))) * B[static_cast<size_t>(k)];
    acc /= n + 1;
    B[static_cast<size_t>(n)] = -acc;
  }
  return B;
}

Residue bernoulli_mod(long n, uint64_t p, unsigned e) {
  if (n < 0) fail(ErrorCode::BadArgument, "bernoulli_mod n >= 0");
  uint64_t mod = pow_u64_checked(p, e);
  if (n == 0) return Residue(1, mod);
  if (n == 1) return Residue::reduce(Rat(-1, 2), mod);
  if (n & 1) return Residue(0, mod);
  // B_n = G_n / (2 (1 - 2^n)); the denominator must be a unit mod p
  Residue two_n = Residue(2, mod).pow(static_cast<uint64_t>(n));
  Residue den = (Residue(1, mod) - two_n) * Residue(2, mod);
  if (den.value() % p == 0)
    fail(ErrorCode::NotInvertible, "1 - 2^n not a unit (ord_p(2) divides n)");
  std::vector<uint64_t> z = zigzag_mod(static_cast<int>(n - 1), mod);
  uint64_t g = genocchi_number_mod(z, mod, n);
  return Residue(g, mod) * den.inverse();
}

// --- harmonic / power sums --------------------------------------------------

HarmonicTable harmonic_table(uint64_t p, unsigned e) {
  if (p <= 3) fail(ErrorCode::BadArgument, "harmonic_table needs p > 3");
  if (e < 1 || e > 3) fail(ErrorCode::BadArgument, "harmonic_table needs 1 <= e <= 3");
  HarmonicTable t;
  t.p = p;
  t.e = e;
  t.modulus = pow_u64_checked(p, e);
  std::vector<uint64_t> inv = inverses_upto(p - 1, t.modulus);
  t.H.resize(p);
  t.H[0] = 0;
  for (uint64_t k = 1; k < p; ++k) t.H[k] = add_mod(t.H[k - 1], inv[k], t.modulus);
  t.Hprime = 0;
  for (uint64_t j = 1; 2 * j - 1 <= p - 2; ++j)
    t.Hprime = add_mod(t.Hprime, inv[2 * j - 1], t.modulus);
  return t;
}

Residue power_sum(uint64_t k, uint64_t p, unsigned e) {
  if (k < 1) fail(ErrorCode::BadArgument, "power_sum k >= 1");
  uint64_t mod = pow_u64_checked(p, e);
  uint64_t acc = 0;
  for (uint64_t r = 1; r <= (p - 1) / 2; ++r)
    acc = add_mod(acc, pow_mod_u64(r, k, mod), mod);
  return Residue(acc, mod);
}

std::vector<uint64_t> odd_power_sums(uint64_t p, unsigned e) {
  uint64_t mod = pow_u64_checked(p, e);
  // S[k] for odd k = 1, 3, ..., p-2, walked with r^{k+2} = r^k * r^2
  std::vector<uint64_t> sums((p - 1) / 2, 0);
  for (uint64_t r = 1; r <= (p - 1) / 2; ++r) {
    uint64_t r2 = mul_mod(r, r, mod);
    uint64_t rk = r; // r^1
    for (size_t idx = 0; idx < sums.size(); ++idx) {
      sums[idx] = add_mod(sums[idx], rk, mod);
      rk = mul_mod(rk, r2, mod);
    }
  }
  return sums;
}

} // namespace conglab::seq
