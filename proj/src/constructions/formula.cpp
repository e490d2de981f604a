#include "polyk/constructions/formula.hpp"

#include <string>

#include "polyk/core/graph.hpp"

namespace polyk {

long long p_one(int a) {
  const long long x = a;
  return (3 * x + 1) / 2 + 2;
}

long long p_formula(int k, int a) {
  if (k < 1 || a < 1)
    throw GraphError("p(k,a) needs k >= 1 and a >= 1, got k=" + std::to_string(k) +
                     " a=" + std::to_string(a));
  if (a == 1) return 4;
  const long long kk = k, aa = a;
  if (k % 2 == 0) return (3 * kk / 2 + 1) * aa;
  return p_one(a) + 3 * aa * (kk - 1) / 2;
}

}  // namespace polyk
