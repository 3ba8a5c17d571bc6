#include "stg/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace stg {

namespace {

std::string strip(std::string s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::string drop_comment(const std::string& s) {
  size_t h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

}  // namespace

PreSymplecticForm form_parse(std::istream& in) {
  std::string line;
  bool have_group = false;
  FgAbelianGroup G;
  std::vector<std::vector<TValue>> m;
  while (std::getline(in, line)) {
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    if (line.rfind("group:", 0) == 0) {
      if (have_group) throw ParseError("duplicate group header");
      G = group_parse(strip(line.substr(6)));
      m.assign(G.dim(), std::vector<TValue>(G.dim()));
      have_group = true;
      continue;
    }
    if (!have_group) throw ParseError("form file must start with 'group:'");
    if (line.rfind("sigma[", 0) != 0) throw ParseError("bad line: " + line);
    size_t b1 = line.find(']');
    size_t o2 = line.find('[', b1);
    size_t b2 = line.find(']', o2);
    size_t eq = line.find('=', b2);
    if (b1 == std::string::npos || o2 == std::string::npos ||
        b2 == std::string::npos || eq == std::string::npos)
      throw ParseError("bad line: " + line);
    int i = 0, j = 0;
    try {
      i = std::stoi(line.substr(6, b1 - 6));
      j = std::stoi(line.substr(o2 + 1, b2 - o2 - 1));
    } catch (const std::exception&) {
      throw ParseError("bad indices in: " + line);
    }
    if (i < 0 || j < 0 || i >= G.dim() || j >= G.dim() || i >= j)
      throw ParseError("entries must use 0-based upper-triangle indices");
    m[i][j] = tvalue_parse(strip(line.substr(eq + 1)));
    m[j][i] = -m[i][j];
  }
  if (!have_group) throw ParseError("empty form file");
  return PreSymplecticForm(std::move(G), std::move(m));
}

PreSymplecticForm form_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open form file '" + path + "'");
  return form_parse(in);
}

std::string form_print(const PreSymplecticForm& f) {
  std::ostringstream os;
  os << "group: " << f.group.str() << "\n";
  for (int i = 0; i < f.dim(); ++i)
    for (int j = i + 1; j < f.dim(); ++j)
      if (!(f.m[i][j] == TValue()))
        os << "sigma[" << i << "][" << j << "] = " << f.m[i][j].str() << "\n";
  return os.str();
}

State state_parse(const FgAbelianGroup& G, std::istream& in) {
  State s;
  s.group = G;
  s.values.emplace(identity_element(G), Cplx(1, 0));
  std::string line;
  while (std::getline(in, line)) {
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("bad state line: " + line);
    std::string lhs = strip(line.substr(0, eq));
    std::string rhs = strip(line.substr(eq + 1));
    double v = 0;
    try {
      v = std::stod(rhs);
    } catch (const std::exception&) {
      throw ParseError("bad state value '" + rhs + "'");
    }
    if (lhs == "default") {
      s.default_value = Cplx(v, 0);
    } else if (lhs.rfind("orbit", 0) == 0) {
      GroupElement g = element_parse(G, lhs.substr(5));
      s.values[g] = Cplx(v, 0);
      // hermiticity for real values: the inverse carries the same value
      s.values.emplace(inverse(G, g), Cplx(v, 0));
    } else {
      throw ParseError("bad state line: " + line);
    }
  }
  return s;
}

State state_load(const FgAbelianGroup& G, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  return state_parse(G, in);
}

SymbolEnv env_parse(const std::string& text) {
  SymbolEnv env;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    tok = strip(tok);
    if (tok.empty()) continue;
    size_t eq = tok.find('=');
    if (eq == std::string::npos || tok[0] != 't')
      throw ParseError("bad env entry '" + tok + "'");
    try {
      int id = std::stoi(tok.substr(1, eq - 1));
      env.bindings[id] = std::stod(tok.substr(eq + 1));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad env entry '" + tok + "'");
    }
  }
  return env;
}

Rat rat_from_decimal(const std::string& text) {
  std::string t = strip(text);
  if (t.empty()) throw ParseError("empty decimal");
  bool neg = false;
  size_t pos = 0;
  if (t[0] == '+' || t[0] == '-') {
    neg = t[0] == '-';
    pos = 1;
  }
  Int num = 0, den = 1;
  bool frac = false, digits = false;
  for (; pos < t.size(); ++pos) {
    char c = t[pos];
    if (c == '.') {
      if (frac) throw ParseError("bad decimal '" + text + "'");
      frac = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (frac) den *= 10;
      digits = true;
    } else {
      throw ParseError("bad decimal '" + text + "'");
    }
  }
  if (!digits) throw ParseError("bad decimal '" + text + "'");
  Rat r(num, den);
  return neg ? -r : r;
}

std::string format_double(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;  // clamp noise, normalize -0
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << x;
  return os.str();
}

std::string format_complex(const Cplx& z) {
  return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

std::vector<GroupMap> gens_load(const FgAbelianGroup& G,
                                const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file '" + path + "'");
  int d = G.dim();
  std::vector<GroupMap> out;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    std::istringstream is(line);
    std::vector<std::vector<long long>> rows(d, std::vector<long long>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!(is >> rows[i][j]))
          throw ParseError("generator line needs " + std::to_string(d * d) +
                           " integers");
    out.push_back(GroupMap::from_rows(std::move(rows)));
  }
  return out;
}

}  // namespace stg
