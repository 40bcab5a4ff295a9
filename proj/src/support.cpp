#include "canweight/support.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

namespace canweight {

ExponentVector::ExponentVector(IntVec c) : coords(std::move(c)) {
  require(!coords.empty(), "exponent vector must have positive dimension");
  require(is_nonnegative(coords), "exponent vector entries must be nonnegative");
}

WeightVector::WeightVector(IntVec c) : coords(std::move(c)) {
  require(!coords.empty(), "weight vector must have positive dimension");
  primitive = (content(coords) == 1);
}

bool lex_less(const ExponentVector& a, const ExponentVector& b) {
  return lex_less(a.coords, b.coords);
}
bool lex_less(const WeightVector& a, const WeightVector& b) {
  return lex_less(a.coords, b.coords);
}

ExponentVector all_ones(int dim) {
  return ExponentVector(IntVec(static_cast<std::size_t>(dim), 1));
}

PolynomialSupport make_support(int dim, std::vector<ExponentVector> vectors,
                               std::optional<std::map<IntVec, Rat>> coeffs) {
  require(dim >= 1, "ambient dimension must be at least 1");
  require(!vectors.empty(), "polynomial support must be nonempty");
  for (const auto& v : vectors)
    require(v.dim() == dim, "support vector dimension mismatch");
  std::sort(vectors.begin(), vectors.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return lex_less(a, b); });
  for (std::size_t i = 1; i < vectors.size(); ++i)
    require(!(vectors[i] == vectors[i - 1]), "duplicate exponent vector in support");
  if (coeffs) {
    require(coeffs->size() == vectors.size(), "coefficient map does not match support");
    for (const auto& v : vectors) {
      auto it = coeffs->find(v.coords);
      require(it != coeffs->end(), "coefficient missing for a support vector");
      require(it->second != 0, "zero coefficient in support");
    }
  }
  PolynomialSupport f;
  f.dim = dim;
  f.support = std::move(vectors);
  f.coeffs = std::move(coeffs);
  return f;
}

Int pairing(const WeightVector& q, const ExponentVector& a) {
  require(q.dim() == a.dim(), "pairing: dimension mismatch");
  return dot(q.coords, a.coords);
}

Int weight_of_poly(const WeightVector& q, const PolynomialSupport& f) {
  require(q.dim() == f.dim, "weight_of_poly: dimension mismatch");
  require(is_nonnegative(q.coords), "weight_of_poly: weight must be entrywise nonnegative");
  check_invariant(!f.support.empty(), "weight_of_poly: empty support");
  Int best;
  bool first = true;
  for (const auto& a : f.support) {
    Int v = dot(q.coords, a.coords);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

Rat monomial_divisor_weight(const WeightVector& q, const PolynomialSupport& f, const Int& m) {
  require(m >= 1, "divisor multiplicity m must be at least 1");
  return Rat(weight_of_poly(q, f), m);
}

WeightVector make_primitive(const WeightVector& q) {
  require(!q.is_zero(), "make_primitive: zero vector has no primitive representative");
  return WeightVector(reduced(q.coords));
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  int dim;
  long long exp_limit;

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "syntax error at position " << pos << ": " << what;
    throw input_error(os.str());
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Int parse_uint(const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(std::string("expected ") + what);
    return Int(std::string(text.substr(start, pos - start)));
  }

  // coeff := INT | INT "/" POSINT, where INT may be signed
  Rat parse_coeff() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    Int num = parse_uint("integer");
    Int den = 1;
    if (eat('/')) {
      den = parse_uint("positive integer denominator");
      if (den == 0) fail("zero denominator");
    }
    Rat c(num, den);
    return neg ? -c : c;
  }

  // factor := "x" INDEX ["^" POSINT]
  void parse_factor(IntVec& exps) {
    skip_ws();
    if (peek() != 'x') fail("expected variable 'x<index>'");
    ++pos;
    Int idx = parse_uint("variable index");
    if (idx >= dim)
      throw input_error("variable index x" + idx.str() + " out of range for dimension " +
                        std::to_string(dim));
    Int e = 1;
    if (eat('^')) {
      e = parse_uint("positive exponent");
      if (e == 0) fail("exponent must be positive");
      if (e > exp_limit) throw input_error("exponent exceeds limit " + std::to_string(exp_limit));
    }
    std::size_t i = static_cast<std::size_t>(static_cast<long long>(idx));
    exps[i] += e;
    if (exps[i] > exp_limit)
      throw input_error("collected exponent exceeds limit " + std::to_string(exp_limit));
  }

  // term := [coeff "*"] factor ("*" factor)*
  void parse_term(std::map<IntVec, Rat>& acc, bool negate) {
    Rat c = 1;
    skip_ws();
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      c = parse_coeff();
      if (!eat('*')) fail("expected '*' after coefficient");
    }
    IntVec exps(static_cast<std::size_t>(dim), 0);
    parse_factor(exps);
    while (true) {
      std::size_t save = pos;
      if (!eat('*')) break;
      if (peek() != 'x') {
        pos = save;
        break;
      }
      parse_factor(exps);
    }
    if (negate) c = -c;
    acc[exps] += c;
  }

  std::map<IntVec, Rat> parse_poly() {
    std::map<IntVec, Rat> acc;
    parse_term(acc, false);
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      char op = text[pos];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos;
      parse_term(acc, op == '-');
    }
    return acc;
  }
};

}  // namespace

PolynomialSupport parse_polynomial(std::string_view text, int dim, long long exponent_limit) {
  require(dim >= 1, "dimension must be at least 1");
  Parser p{text, 0, dim, exponent_limit};
  auto acc = p.parse_poly();
  std::vector<ExponentVector> vectors;
  std::map<IntVec, Rat> coeffs;
  for (auto& [exps, c] : acc) {
    if (c == 0) continue;  // cancelled after collection
    vectors.emplace_back(exps);
    coeffs.emplace(exps, c);
  }
  require(!vectors.empty(), "polynomial has empty support after coefficient collection");
  return make_support(dim, std::move(vectors), std::move(coeffs));
}

std::string to_text(const PolynomialSupport& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& a : f.support) {
    Rat c = 1;
    if (f.coeffs) c = f.coeffs->at(a.coords);
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    bool lead_neg = first && neg;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool wrote_coeff = false;
    // a leading "-x0" is not in the grammar; spell the unit coefficient out
    if (mag != 1 || lead_neg) {
      os << rat_to_string(mag);
      wrote_coeff = true;
    }
    bool any_var = false;
    for (int i = 0; i < f.dim; ++i) {
      if (a.coords[static_cast<std::size_t>(i)] == 0) continue;
      if (wrote_coeff || any_var) os << "*";
      os << "x" << i;
      if (a.coords[static_cast<std::size_t>(i)] > 1)
        os << "^" << a.coords[static_cast<std::size_t>(i)];
      any_var = true;
    }
    if (!any_var) {
      // exponent zero vector: emit an explicit coefficient so the text stays faithful
      if (!wrote_coeff) os << rat_to_string(mag);
      os << "*x0^0";
    }
  }
  return os.str();
}

std::string support_hash(const PolynomialSupport& f) {
  std::string s = std::to_string(f.dim) + "|" + to_text(f);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace canweight
