#include "bdcoh/number_theory.hpp"

#include <algorithm>

#include "bdcoh/errors.hpp"
#include "bdcoh/quad_ext.hpp"

namespace bdcoh {

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n, long bound) {
  if (n == 0) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  n = abs(n);
  std::vector<std::pair<BigInt, unsigned>> out;
  auto pull = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  pull(BigInt(2));
  for (long p = 3; p <= bound; p += 2) {
    BigInt bp(p);
    if (bp * bp > n) break;
    pull(bp);
  }
  if (n > 1) {
    BigInt b(bound);
    if (n > b * b && mpz_probab_prime_p(n.get_mpz_t(), 40) != 2) {
      throw Error(ErrorKind::FactorizationBound,
                  "cofactor " + n.get_str() + " exceeds the trial-division bound " + std::to_string(bound));
    }
    out.emplace_back(n, 1);
  }
  return out;
}

bool is_squarefree(long d) {
  if (d == 0) return false;
  for (const auto& [p, e] : factorize(BigInt(d))) {
    if (e > 1) return false;
  }
  return true;
}

BigInt squarefree_part(const Rational& x, long bound) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroInput, "square class of zero");
  // x * den^2 = num * den lies in the same square class.
  BigInt m = x.num() * x.den();
  BigInt out = 1;
  for (const auto& [p, e] : factorize(m, bound)) {
    if (e % 2 == 1) out *= p;
  }
  return x.sign() < 0 ? BigInt(-out) : out;
}

unsigned valuation(BigInt n, const BigInt& p) {
  if (n == 0) throw Error(ErrorKind::ZeroInput, "valuation of zero");
  unsigned e = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++e;
  }
  return e;
}

namespace {

// Integer representative of the square class of x.
BigInt integral_class(const Rational& x) { return x.num() * x.den(); }

int legendre(const BigInt& u, const BigInt& p) {
  return mpz_legendre(BigInt(u % p + p).get_mpz_t(), p.get_mpz_t());
}

int mod8(const BigInt& u) {
  BigInt r = u % 8;
  if (r < 0) r += 8;
  return static_cast<int>(r.get_si());
}

}  // namespace

int hilbert_symbol_local(const Rational& a_in, const Rational& b_in, const Place& v) {
  if (a_in.is_zero() || b_in.is_zero()) throw Error(ErrorKind::ZeroInput, "Hilbert symbol of zero");
  if (v.is_infinite()) return (a_in.sign() < 0 && b_in.sign() < 0) ? -1 : 1;

  BigInt a = integral_class(a_in);
  BigInt b = integral_class(b_in);
  const BigInt& p = v.prime;
  unsigned alpha = valuation(a, p);
  unsigned beta = valuation(b, p);
  BigInt u = a, w = b;
  for (unsigned i = 0; i < alpha; ++i) u /= p;
  for (unsigned i = 0; i < beta; ++i) w /= p;

  if (p == 2) {
    auto eps = [](int r) { return (r == 3 || r == 7) ? 1 : 0; };
    auto omega = [](int r) { return (r == 3 || r == 5) ? 1 : 0; };
    int ru = mod8(u), rw = mod8(w);
    int e = eps(ru) * eps(rw) + static_cast<int>(alpha) * omega(rw) + static_cast<int>(beta) * omega(ru);
    return e % 2 == 0 ? 1 : -1;
  }

  int sign = 1;
  BigInt half = (p - 1) / 2;
  if ((alpha * beta) % 2 == 1 && half % 2 == 1) sign = -sign;
  if (beta % 2 == 1) sign *= legendre(u, p);
  if (alpha % 2 == 1) sign *= legendre(w, p);
  return sign;
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
  std::vector<BigInt> primes{BigInt(2)};
  for (const BigInt& m : {a.num(), a.den(), b.num(), b.den()}) {
    for (const auto& [p, e] : factorize(m)) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out;
  for (auto& p : primes) out.push_back(Place{p});
  out.push_back(Place::infinity());
  return out;
}

std::vector<Place> ramified_places(const Rational& a, const Rational& b) {
  std::vector<Place> out;
  for (const Place& v : relevant_places(a, b)) {
    if (hilbert_symbol_local(a, b, v) == -1) out.push_back(v);
  }
  return out;
}

int hilbert_symbol_global(const Rational& a, const Rational& b) { return ramified_places(a, b).empty() ? 1 : -1; }

}  // namespace bdcoh
