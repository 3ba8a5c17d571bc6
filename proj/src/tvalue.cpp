#include "stg/tvalue.hpp"

#include <cmath>
#include <sstream>

namespace stg {

Int rat_floor(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Rat rat_mod1(const Rat& r) { return r - Rat(rat_floor(r)); }

TValue::TValue(Rat rational_lift, std::map<int, Rat> coeffs)
    : lift(std::move(rational_lift)) {
  for (auto& [id, c] : coeffs)
    if (c != 0) irr.emplace(id, std::move(c));
}

TValue TValue::operator+(const TValue& o) const {
  std::map<int, Rat> c = irr;
  for (const auto& [id, v] : o.irr) {
    auto it = c.find(id);
    if (it == c.end())
      c.emplace(id, v);
    else {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }
  TValue r;
  r.lift = lift + o.lift;
  r.irr = std::move(c);
  return r;
}

TValue TValue::operator-() const {
  TValue r;
  r.lift = -lift;
  for (const auto& [id, v] : irr) r.irr.emplace(id, -v);
  return r;
}

TValue TValue::operator-(const TValue& o) const { return *this + (-o); }

TValue TValue::operator*(const Int& n) const {
  if (n == 0) return TValue();
  TValue r;
  r.lift = lift * Rat(n);
  for (const auto& [id, v] : irr) r.irr.emplace(id, v * Rat(n));
  return r;
}

bool TValue::operator==(const TValue& o) const {
  if (irr != o.irr) return false;
  return rat_den(lift - o.lift) == 1;
}

std::string TValue::str() const {
  std::ostringstream os;
  bool first = true;
  if (lift != 0 || irr.empty()) {
    os << lift;
    first = false;
  }
  for (const auto& [id, v] : irr) {
    if (!first) os << " + ";
    os << v << "*t" << id;
    first = false;
  }
  return os.str();
}

TValue tvalue_symbol(int id, Rat coeff) {
  TValue t;
  if (coeff != 0) t.irr.emplace(id, std::move(coeff));
  return t;
}

double SymbolEnv::binding(int id) const {
  auto it = bindings.find(id);
  if (it == bindings.end())
    throw UnboundSymbol("unbound symbol t" + std::to_string(id));
  return it->second;
}

bool SymbolEnv::binds_all(const TValue& t) const {
  for (const auto& [id, v] : t.irr)
    if (!bindings.count(id)) return false;
  return true;
}

double tvalue_eval_raw(const TValue& t, const SymbolEnv& env) {
  double x = static_cast<double>(t.lift);
  for (const auto& [id, c] : t.irr)
    x += static_cast<double>(c) * env.binding(id);
  return x;
}

double tvalue_eval(const TValue& t, const SymbolEnv& env) {
  double x = tvalue_eval_raw(t, env);
  x -= std::floor(x);
  if (x >= 1.0) x = 0.0;  // guard against floor rounding at the boundary
  return x;
}

namespace {

Rat parse_rat(const std::string& s) {
  // "a", "a/b", optional leading -
  if (s.empty()) throw ParseError("empty rational");
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

void strip(std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
}

}  // namespace

TValue tvalue_parse(const std::string& text) {
  // terms separated by '+'; a term is either a rational or "c*tK"
  Rat lift(0);
  std::map<int, Rat> coeffs;
  std::string rest = text;
  // split on '+' that are term separators (binary, surrounded by spaces or
  // following a digit); simplest: split on '+' not at position 0
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == '+' && i > start) {
      parts.push_back(rest.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(rest.substr(start));
  for (std::string part : parts) {
    strip(part);
    if (part.empty()) throw ParseError("empty term in '" + text + "'");
    size_t star = part.find('*');
    if (star == std::string::npos) {
      lift += parse_rat(part);
    } else {
      std::string c = part.substr(0, star), sym = part.substr(star + 1);
      strip(c);
      strip(sym);
      if (sym.size() < 2 || sym[0] != 't')
        throw ParseError("bad symbol '" + sym + "'");
      int id = 0;
      try {
        id = std::stoi(sym.substr(1));
      } catch (const std::exception&) {
        throw ParseError("bad symbol '" + sym + "'");
      }
      coeffs[id] += parse_rat(c);
    }
  }
  return TValue(lift, coeffs);
}

}  // namespace stg
