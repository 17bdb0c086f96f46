#pragma once

// Exact arithmetic layer. Everything in this library runs on GMP rationals
// and integers; no floating point anywhere.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace torq {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else
// (including q = 0). Result is canonical (reduced, denominator > 0).
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& q);
std::string to_string(const RatVec& v);  // "(a, b, ...)" for messages

bool is_integer(const Rat& q);
Int floor_rat(const Rat& q);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

RatVec to_rat_vec(const IntVec& v);
RatVec zero_vec(int n);
bool is_zero(const RatVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);
RatVec negate(const RatVec& v);

// Entrywise reduction mod Z to the fundamental domain [0,1).
RatVec mod_one(const RatVec& v);

Int lcm_denominators(const RatVec& v);

// Clears denominators and divides out the content; the zero vector maps to
// itself. The sign is kept (no canonical orientation is imposed).
IntVec primitive_integer(const RatVec& v);

// Lexicographic comparison, usable as a strict weak order for sets/sorting.
bool lex_less(const RatVec& a, const RatVec& b);

}  // namespace torq
