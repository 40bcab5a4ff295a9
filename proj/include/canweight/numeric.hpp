#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace canweight {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

// Bad user input: parse errors, malformed weights, dimension mismatches. CLI exit 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A violated exactness assertion. Abort rather than degrade. CLI exit 3.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Enumeration work cap exceeded (CANWEIGHT_MAX_CELLS / --cap). CLI exit 3.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

inline void check_invariant(bool cond, const std::string& msg) {
  if (!cond) throw invariant_error(msg);
}

// gcd of absolute values; 0 for the zero vector.
Int content(const IntVec& v);

// v divided by its content (identity on the zero vector).
IntVec reduced(IntVec v);

bool is_zero(const IntVec& v);
bool is_nonnegative(const IntVec& v);
bool is_positive(const IntVec& v);
bool lex_less(const IntVec& a, const IntVec& b);

// floor/ceil of num/den for den > 0
Int floor_div(const Int& num, const Int& den);
Int ceil_div(const Int& num, const Int& den);
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& c, const IntVec& v);
// a*x + b*y
IntVec combine(const Int& a, const IntVec& x, const Int& b, const IntVec& y);

std::string vec_to_string(const IntVec& v);  // "(1, 2, 3)"
std::string rat_to_string(const Rat& r);     // "3/2" or "4"

// Global enumeration cap (number of lattice cells / box points a single
// enumeration may visit). Initialized from CANWEIGHT_MAX_CELLS if set.
unsigned long long work_cap();
void set_work_cap(unsigned long long cap);

}  // namespace canweight
