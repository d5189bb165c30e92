#include "ordram/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace ordram {

namespace {

long long isqrt(long long x) {
  auto r = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

long long binomial(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// floor((b + sqrt(d)) / 2) for integers b and d >= 0. With s = isqrt(d),
// floor(sqrt(d)) = s, and floor((b + x) / 2) only depends on floor(x) here.
long long half_root_floor(long long b, long long d) {
  const long long s = isqrt(d);
  const long long t = b + s;
  return t >= 0 ? t / 2 : -((-t + 1) / 2);
}

}  // namespace

Bracket nm_k3_bounds(int n) {
  if (n < 1) throw std::invalid_argument("nm_k3_bounds needs n >= 1");
  const long long nn = n;
  Bracket b;
  if (n <= 3) {
    b.lo = 4 * nn - 1;
  } else if (n == 4) {
    b.lo = 16;
  } else if (n == 5) {
    b.lo = 20;
  } else {
    b.lo = 4 * nn + 1;
  }
  b.hi = half_root_floor(6 * nn - 3, 20 * nn * nn - 12 * nn + 1) + 1;
  return b;
}

Bracket nm_kn_bounds(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("nm_kn_bounds needs m, n >= 1");
  const long long mm = m;
  const long long nn = n;
  Bracket b;
  b.lo = (2 * mm - 1) * (nn - 1) + 1;
  const long long d = (4 * mm - 3) * (4 * mm - 3) * nn * nn - 16 * mm * mm * nn + 24 * mm * nn -
                      8 * nn;
  if (d < 0) {
    // r(K_{2m}, K_{n+1}) <= C(2m + n - 1, n) bounds the ordered number too.
    b.hi = binomial(2 * mm + nn - 1, nn);
    b.fallback = true;
  } else {
    b.hi = half_root_floor(4 * mm * nn - 3 * nn, d) + 1;
  }
  return b;
}

}  // namespace ordram
