#include "torq/rational.hpp"

#include <cctype>
#include <sstream>

#include "torq/errors.hpp"

namespace torq {

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto digits_ok = [](const std::string& part, bool sign_ok) {
    if (part.empty()) return false;
    size_t i = 0;
    if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };

  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits_ok(s, true))
      throw std::invalid_argument("bad rational literal: " + text);
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
      throw std::invalid_argument("bad rational literal: " + text);
    if (Int(den) == 0)
      throw std::invalid_argument("zero denominator: " + text);
  }
  Rat q(s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

bool is_integer(const Rat& q) {
  // robust against non-canonical values like 6/3
  return mpz_divisible_p(q.get_num().get_mpz_t(), q.get_den().get_mpz_t()) != 0;
}

Int floor_rat(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw DimensionMismatchError("dot: lengths " + std::to_string(a.size()) +
                                 " vs " + std::to_string(b.size()));
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw DimensionMismatchError("dot: lengths " + std::to_string(a.size()) +
                                 " vs " + std::to_string(b.size()));
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw DimensionMismatchError("dot: lengths " + std::to_string(a.size()) +
                                 " vs " + std::to_string(b.size()));
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

RatVec zero_vec(int n) { return RatVec(static_cast<size_t>(n), Rat(0)); }

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("add: length mismatch");
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("sub: length mismatch");
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const Rat& c, const RatVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

RatVec negate(const RatVec& v) { return scale(Rat(-1), v); }

RatVec mod_one(const RatVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] - Rat(floor_rat(v[i]));
    out[i].canonicalize();  // tolerate non-canonical input representations
  }
  return out;
}

Int lcm_denominators(const RatVec& v) {
  Int l = 1;
  for (const Rat& q : v) {
    Int den = q.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

IntVec primitive_integer(const RatVec& v0) {
  RatVec v = v0;
  for (Rat& q : v) q.canonicalize();
  Int l = lcm_denominators(v);
  IntVec w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(l);
    w[i] = scaled.get_num();  // denominator is 1 after scaling
    Int a = abs(w[i]);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace torq
