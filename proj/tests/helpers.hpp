#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "canweight/support.hpp"

namespace canweight::test {

inline WeightVector w(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.push_back(Int(x));
  return WeightVector(std::move(v));
}

inline ExponentVector e(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.push_back(Int(x));
  return ExponentVector(std::move(v));
}

inline IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

inline PolynomialSupport poly(const std::string& text, int dim) {
  return parse_polynomial(text, dim);
}

// dim-4 counterexample polynomial with a1 = a2 = a3 = 6
inline PolynomialSupport quad_counterexample() {
  return poly("x0*x1*x2*x3 + x0^3 + x1^2*x2^2 + x1^6 + x2^6 + x3^6", 4);
}

inline PolynomialSupport k3_deform_example(int s) {
  return poly("x0^2 + x1^3 + x2^7 + x3^" + std::to_string(43 + s) + " + x0*x1*x2*x3", 4);
}

inline PolynomialSupport double_weight_example(int k) {
  return poly("x0^" + std::to_string(k) + " + x1^" + std::to_string(k + 1) + " + x2^" +
                  std::to_string(k + 1),
              3);
}

}  // namespace canweight::test
