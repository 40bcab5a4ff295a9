#include "canweight/numeric.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>

namespace canweight {

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return abs(g);
}

IntVec reduced(IntVec v) {
  Int g = content(v);
  if (g > 1) {
    for (Int& x : v) x /= g;
  }
  return v;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool is_nonnegative(const IntVec& v) {
  for (const Int& x : v)
    if (x < 0) return false;
  return true;
}

bool is_positive(const IntVec& v) {
  for (const Int& x : v)
    if (x <= 0) return false;
  return true;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Int floor_div(const Int& num, const Int& den) {
  check_invariant(den > 0, "floor_div: denominator must be positive");
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Int ceil_div(const Int& num, const Int& den) {
  check_invariant(den > 0, "ceil_div: denominator must be positive");
  Int q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

Int floor_rat(const Rat& r) { return floor_div(numerator(r), denominator(r)); }
Int ceil_rat(const Rat& r) { return ceil_div(numerator(r), denominator(r)); }

Int dot(const IntVec& a, const IntVec& b) {
  check_invariant(a.size() == b.size(), "dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  check_invariant(a.size() == b.size(), "add: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  check_invariant(a.size() == b.size(), "sub: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scale(const Int& c, const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

IntVec combine(const Int& a, const IntVec& x, const Int& b, const IntVec& y) {
  check_invariant(x.size() == y.size(), "combine: dimension mismatch");
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
  return r;
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  if (denominator(r) == 1) {
    os << numerator(r);
  } else {
    os << numerator(r) << "/" << denominator(r);
  }
  return os.str();
}

namespace {
std::atomic<unsigned long long> g_work_cap{[] {
  if (const char* env = std::getenv("CANWEIGHT_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 5'000'000ULL;
}()};
}  // namespace

unsigned long long work_cap() { return g_work_cap.load(); }
void set_work_cap(unsigned long long cap) {
  if (cap > 0) g_work_cap.store(cap);
}

}  // namespace canweight
