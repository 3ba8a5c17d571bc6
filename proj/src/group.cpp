#include "stg/group.hpp"

#include <numeric>
#include <sstream>

namespace stg {

FgAbelianGroup::FgAbelianGroup(int r, std::vector<long long> orders)
    : free_rank(r), torsion_orders(std::move(orders)) {
  if (r < 0) throw Error("negative free rank");
  for (long long n : torsion_orders)
    if (n < 2) throw Error("torsion order must be >= 2");
}

Int FgAbelianGroup::order() const {
  if (!is_finite()) throw NotFinite("group has positive free rank");
  Int n = 1;
  for (long long m : torsion_orders) n *= m;
  return n;
}

Int FgAbelianGroup::exponent() const {
  Int e = 1;
  for (long long m : torsion_orders) e = boost::multiprecision::lcm(e, Int(m));
  return e;
}

bool FgAbelianGroup::canonical_chain() const {
  for (size_t i = 0; i + 1 < torsion_orders.size(); ++i)
    if (torsion_orders[i + 1] % torsion_orders[i] != 0) return false;
  return true;
}

std::string FgAbelianGroup::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0 || torsion_orders.empty()) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (long long n : torsion_orders) {
    if (!first) os << " x ";
    os << "Z/" << n;
    first = false;
  }
  return os.str();
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

GroupElement reduce(const FgAbelianGroup& G, GroupElement g) {
  if (static_cast<int>(g.c.size()) != G.dim())
    throw DimensionMismatch("element/group dimension mismatch");
  for (size_t i = 0; i < G.torsion_orders.size(); ++i) {
    long long n = G.torsion_orders[i];
    long long& x = g.c[G.free_rank + i];
    x %= n;
    if (x < 0) x += n;
  }
  return g;
}

GroupElement identity_element(const FgAbelianGroup& G) {
  GroupElement g;
  g.c.assign(G.dim(), 0);
  return g;
}

GroupElement make_element(const FgAbelianGroup& G,
                          std::vector<long long> coords) {
  GroupElement g;
  g.c = std::move(coords);
  return reduce(G, std::move(g));
}

GroupElement group_op(const FgAbelianGroup& G, const GroupElement& x,
                      const GroupElement& y, GroupOpMode mode) {
  switch (mode) {
    case GroupOpMode::identity:
      return identity_element(G);
    case GroupOpMode::inverse: {
      GroupElement r = x;
      if (static_cast<int>(r.c.size()) != G.dim())
        throw DimensionMismatch("element/group dimension mismatch");
      for (auto& v : r.c) v = -v;
      return reduce(G, std::move(r));
    }
    case GroupOpMode::compose: {
      if (x.c.size() != y.c.size())
        throw DimensionMismatch("element dimension mismatch");
      GroupElement r = x;
      for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
      return reduce(G, std::move(r));
    }
  }
  throw Error("unreachable");
}

GroupElement compose(const FgAbelianGroup& G, const GroupElement& x,
                     const GroupElement& y) {
  return group_op(G, x, y, GroupOpMode::compose);
}

GroupElement inverse(const FgAbelianGroup& G, const GroupElement& x) {
  return group_op(G, x, x, GroupOpMode::inverse);
}

GroupElement scalar_mul(const FgAbelianGroup& G, long long n,
                        const GroupElement& x) {
  GroupElement r = x;
  for (auto& v : r.c) v *= n;
  return reduce(G, std::move(r));
}

bool is_identity(const FgAbelianGroup& G, const GroupElement& g) {
  for (int i = 0; i < G.free_rank; ++i)
    if (g.c[i] != 0) return false;
  for (size_t i = 0; i < G.torsion_orders.size(); ++i)
    if (g.c[G.free_rank + i] % G.torsion_orders[i] != 0) return false;
  return true;
}

std::optional<long long> element_order(const FgAbelianGroup& G,
                                       const GroupElement& g) {
  GroupElement r = reduce(G, g);
  for (int i = 0; i < G.free_rank; ++i)
    if (r.c[i] != 0) return std::nullopt;
  long long ord = 1;
  for (size_t i = 0; i < G.torsion_orders.size(); ++i) {
    long long n = G.torsion_orders[i], x = r.c[G.free_rank + i];
    long long o = n / std::gcd(n, x);  // order of x in Z/n
    ord = std::lcm(ord, o);
  }
  return ord;
}

std::vector<GroupElement> enumerate_elements(const FgAbelianGroup& G, Int cap) {
  if (!G.is_finite()) throw NotFinite("cannot enumerate infinite group");
  if (G.order() > cap) throw GroupTooLarge("group order exceeds cap");
  std::vector<GroupElement> out;
  GroupElement g = identity_element(G);
  size_t k = G.torsion_orders.size();
  while (true) {
    out.push_back(g);
    // odometer increment
    size_t i = k;
    while (i > 0) {
      --i;
      if (++g.c[i] < G.torsion_orders[i]) break;
      g.c[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

FgAbelianGroup group_parse(const std::string& text) {
  // tokens separated by 'x': "Z^r", "Z/n"
  int free_rank = 0;
  bool saw_free = false;
  std::vector<long long> orders;
  std::istringstream is(text);
  std::string tok;
  bool any = false;
  while (std::getline(is, tok, 'x')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    tok = tok.substr(a, b - a + 1);
    any = true;
    try {
      if (tok.rfind("Z^", 0) == 0) {
        if (saw_free) throw ParseError("duplicate free part");
        free_rank = std::stoi(tok.substr(2));
        saw_free = true;
      } else if (tok.rfind("Z/", 0) == 0) {
        orders.push_back(std::stoll(tok.substr(2)));
      } else if (tok == "Z") {
        if (saw_free) throw ParseError("duplicate free part");
        free_rank = 1;
        saw_free = true;
      } else {
        throw ParseError("bad group token '" + tok + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad group token '" + tok + "'");
    }
  }
  if (!any) throw ParseError("empty group description");
  return FgAbelianGroup(free_rank, std::move(orders));
}

GroupElement element_parse(const FgAbelianGroup& G, const std::string& text) {
  size_t a = text.find('(');
  size_t b = text.find(')');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw ParseError("bad element '" + text + "'");
  std::string body = text.substr(a + 1, b - a - 1);
  std::vector<long long> coords;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      coords.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw ParseError("bad coordinate '" + tok + "'");
    }
  }
  if (static_cast<int>(coords.size()) != G.dim())
    throw ParseError("element has wrong dimension");
  return make_element(G, std::move(coords));
}

}  // namespace stg
