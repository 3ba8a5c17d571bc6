#ifndef STG_TVALUE_HPP
#define STG_TVALUE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

#include "stg/errors.hpp"

namespace stg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// floor of a rational
Int rat_floor(const Rat& r);
// residue of r mod 1, in [0,1)
Rat rat_mod1(const Rat& r);

// An element of T = R/Z, stored exactly as a rational lift plus rational
// coefficients of formal irrational symbols t1, t2, ...  The symbols are
// treated as Q-linearly independent of each other and of 1, so equality
// mod 1 and torsion-ness are decidable.  The raw (unreduced) lift is kept:
// bilinear lifts of forms need it, equality always reduces mod 1.
struct TValue {
  Rat lift;                 // raw rational lift
  std::map<int, Rat> irr;   // symbol id -> nonzero rational coefficient

  TValue() = default;
  explicit TValue(Rat rational_lift) : lift(std::move(rational_lift)) {}
  TValue(Rat rational_lift, std::map<int, Rat> coeffs);

  // value lies in the torsion subgroup Q/Z of T
  bool is_torsion() const { return irr.empty(); }
  bool is_zero() const { return irr.empty() && rat_den(lift) == 1; }
  // canonical representative of the rational part in [0,1)
  Rat residue() const { return rat_mod1(lift); }

  TValue operator+(const TValue& o) const;
  TValue operator-(const TValue& o) const;
  TValue operator-() const;
  TValue operator*(const Int& n) const;  // integer scalar multiple

  // equality as elements of R/Z
  bool operator==(const TValue& o) const;
  bool operator!=(const TValue& o) const { return !(*this == o); }

  std::string str() const;  // "a/b", "0", "a/b + c/d*t1 + ..."
};

inline TValue tvalue_canonicalize(Rat lift, std::map<int, Rat> coeffs) {
  return TValue(std::move(lift), std::move(coeffs));
}

// a single symbol term c*t<id>
TValue tvalue_symbol(int id, Rat coeff = Rat(1));

// Numeric bindings for the formal symbols; fixed for the lifetime of a
// computation.
struct SymbolEnv {
  std::map<int, double> bindings;  // symbol id -> value in (0,1)

  double binding(int id) const;
  bool binds_all(const TValue& t) const;
};

// rational_lift + sum coeff*binding, reduced mod 1 into [0,1)
double tvalue_eval(const TValue& t, const SymbolEnv& env);
// same sum without the final reduction; used by bilinear lifts
double tvalue_eval_raw(const TValue& t, const SymbolEnv& env);

TValue tvalue_parse(const std::string& text);

}  // namespace stg

#endif
