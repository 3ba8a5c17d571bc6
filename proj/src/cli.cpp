#include "stg/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stg/chern_simons.hpp"
#include "stg/io.hpp"
#include "stg/normal_form.hpp"

namespace stg::cli {

namespace {

std::vector<GroupElement> parse_subset(const FgAbelianGroup& G,
                                       const std::string& text) {
  std::vector<GroupElement> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ';')) {
    if (tok.find('(') == std::string::npos) continue;
    out.push_back(element_parse(G, tok));
  }
  if (out.empty()) throw ParseError("empty element subset");
  return out;
}

std::vector<GroupMap> resolve_gens(const PreSymplecticForm& f,
                                   const std::string& spec) {
  if (spec == "auto") return auto_generators(f);
  return gens_load(f.group, spec);
}

int cmd_normal_form(const std::string& form_path, bool check,
                    std::ostream& out) {
  PreSymplecticForm f = form_load(form_path);
  SkewNormalForm snf;
  TValue scale;
  if (f.group.is_torsion_free()) {
    std::tie(snf, scale) = diagonalize_rank1_form(f);
  } else if (f.group.is_finite()) {
    // torsion entries are rationals; clear denominators and reduce over Z
    Int den = 1;
    for (int i = 0; i < f.dim(); ++i)
      for (int j = i + 1; j < f.dim(); ++j) {
        if (!f.m[i][j].irr.empty())
          throw Error("torsion form with symbolic entries");
        den = boost::multiprecision::lcm(den, rat_den(f.m[i][j].lift));
      }
    IMat M(f.dim(), f.dim());
    for (int i = 0; i < f.dim(); ++i)
      for (int j = 0; j < f.dim(); ++j)
        M.at(i, j) = rat_num(f.m[i][j].lift) * (den / rat_den(f.m[i][j].lift));
    snf = skew_normal_form(M);
    scale = TValue(Rat(1, den));
    for (auto& b : snf.block_values) {
      Rat r = b.lift / Rat(den);
      b = TValue(r);
    }
  } else {
    throw Error("mixed free/torsion groups are not supported by normal-form");
  }
  out << "group: " << f.group.str() << "\n";
  out << "scale: " << scale.str() << "\n";
  out << "blocks:";
  for (size_t i = 0; i < snf.block_values.size(); ++i)
    out << (i ? ", " : " ") << snf.block_values[i].str();
  out << "\n";
  out << "null_rank: " << snf.null_rank << "\n";
  out << "U:\n";
  for (int i = 0; i < snf.transform.rows; ++i) {
    for (int j = 0; j < snf.transform.cols; ++j) {
      if (j) out << ' ';
      out << snf.transform.at(i, j);
    }
    out << "\n";
  }
  if (check) {
    // re-multiply: the transformed basis must evaluate to the block shape
    Int dU = det(snf.transform);
    bool ok = (dU == 1 || dU == -1);
    for (int i = 0; i < f.dim() && ok; ++i)
      for (int j = i + 1; j < f.dim() && ok; ++j) {
        GroupElement ei = identity_element(f.group),
                     ej = identity_element(f.group);
        for (int r = 0; r < f.dim(); ++r) {
          ei.c[r] = static_cast<long long>(snf.transform.at(r, i));
          ej.c[r] = static_cast<long long>(snf.transform.at(r, j));
        }
        TValue got = evaluate(f, reduce(f.group, ei), reduce(f.group, ej));
        TValue want;
        if (i % 2 == 0 && j == i + 1 &&
            i / 2 < static_cast<int>(snf.block_values.size()))
          want = snf.block_values[i / 2];
        if (!(got == want)) ok = false;
      }
    out << "check: " << (ok ? "OK" : "FAILED") << "\n";
    if (!ok) return 1;
  }
  return 0;
}

int cmd_orbits(const std::string& form_path, const std::string& gens_spec,
               long long box, std::ostream& out) {
  PreSymplecticForm f = form_load(form_path);
  auto gens = resolve_gens(f, gens_spec);
  std::ostringstream lines;
  if (f.group.is_finite()) {
    auto part = enumerate_orbits(f, gens);
    std::vector<std::pair<GroupElement, size_t>> rows;
    for (size_t i = 0; i < part.orbits.size(); ++i)
      rows.emplace_back(part.representatives[i], part.orbits[i].size());
    std::sort(rows.begin(), rows.end());
    for (const auto& [rep, size] : rows)
      lines << size << " rep=" << rep.str() << "\n";
  } else {
    // box-restricted closures; sizes are truncated to the box
    std::set<GroupElement> seen;
    std::vector<std::pair<GroupElement, size_t>> rows;
    std::vector<long long> v(f.dim(), -box);
    for (;;) {
      GroupElement g = make_element(f.group, v);
      if (!seen.count(g)) {
        auto orbit = bfs_orbit_in_box(f, gens, g, box);
        for (const auto& x : orbit) seen.insert(x);
        rows.emplace_back(*std::min_element(orbit.begin(), orbit.end()),
                          orbit.size());
      }
      int i = f.dim() - 1;
      while (i >= 0 && v[i] == box) v[i--] = -box;
      if (i < 0) break;
      ++v[i];
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [rep, size] : rows)
      lines << size << " rep=" << rep.str() << "\n";
  }
  out << lines.str();
  return 0;
}

int cmd_ergodic(const std::string& form_path, std::ostream& out) {
  PreSymplecticForm f = form_load(form_path);
  out << "ergodic: " << to_string(is_ergodic(f)) << "\n";
  return 0;
}

int cmd_gram(const std::string& form_path, const std::string& state_path,
             const std::string& env_text, const std::string& subset,
             double tol, const std::string& convention, std::ostream& out) {
  PreSymplecticForm f = form_load(form_path);
  State s = state_load(f.group, state_path);
  Cocycle c(f, env_parse(env_text),
            convention == "half" ? CocycleConvention::half
                                 : CocycleConvention::full);
  auto elems = parse_subset(f.group, subset);
  GramMatrix g = gram_matrix(s, elems, c);
  for (int i = 0; i < g.h.rows(); ++i) {
    for (int j = 0; j < g.h.cols(); ++j) {
      if (j) out << ' ';
      out << format_complex(g.h(i, j));
    }
    out << "\n";
  }
  double e = min_eigenvalue(g);
  out << "min_eigenvalue: " << format_double(e) << "\n";
  return e >= -tol ? 0 : 1;
}

int cmd_check_state(const std::string& form_path, const std::string& state_path,
                    const std::string& env_text, const std::string& subset,
                    double tol, bool exact, const std::string& convention,
                    std::ostream& out) {
  PreSymplecticForm f = form_load(form_path);
  State s = state_load(f.group, state_path);
  std::vector<GroupElement> elems;
  if (!subset.empty())
    elems = parse_subset(f.group, subset);
  else if (f.group.is_finite())
    elems = enumerate_elements(f.group, Int(4096));
  else
    throw Error("infinite group needs --subset");
  if (exact) {
    // exact path: untwisted forms with rational state values only
    for (int i = 0; i < f.dim(); ++i)
      for (int j = 0; j < f.dim(); ++j)
        if (!(f.m[i][j] == TValue()))
          throw Error("--exact supports only the untwisted form");
    std::vector<std::vector<Rat>> H(elems.size(),
                                    std::vector<Rat>(elems.size()));
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = 0; j < elems.size(); ++j) {
        GroupElement gij =
            compose(f.group, inverse(f.group, elems[i]), elems[j]);
        Cplx w = s.value(gij);
        if (w.imag() != 0) throw Error("--exact needs real state values");
        std::ostringstream tmp;
        tmp.imbue(std::locale::classic());
        tmp << std::setprecision(17) << w.real();
        H[i][j] = rat_from_decimal(tmp.str());
      }
    bool ok = exact_psd(std::move(H));
    out << "positive: " << (ok ? "yes" : "no") << " (exact)\n";
    return ok ? 0 : 1;
  }
  Cocycle c(f, env_parse(env_text),
            convention == "half" ? CocycleConvention::half
                                 : CocycleConvention::full);
  GramMatrix g = gram_matrix(s, elems, c);
  double e = min_eigenvalue(g);
  bool ok = e >= -tol;
  out << "min_eigenvalue: " << format_double(e) << "\n";
  out << "positive: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_search_states(const std::string& form_path,
                      const std::string& gens_spec, double grid,
                      std::ostream& out) {
  PreSymplecticForm f = form_load(form_path);
  auto gens = resolve_gens(f, gens_spec);
  auto res = invariant_state_search(f, gens, grid);
  out << "orbits:";
  for (const auto& r : res.orbit_reps) out << ' ' << r.str();
  out << "\n";
  size_t feasible = 0;
  for (const auto& [vals, ok] : res.grid)
    if (ok) ++feasible;
  out << "grid_points: " << res.grid.size() << "\n";
  out << "feasible_points: " << feasible << "\n";
  if (res.interval)
    out << "feasible_interval: [" << format_double(res.interval->first) << ", "
        << format_double(res.interval->second) << "]\n";
  return feasible > 0 ? 0 : 1;
}

int cmd_algebra_eval(const std::string& form_path, const std::string& env_text,
                     const std::string& expr_path,
                     const std::string& convention, std::ostream& out) {
  PreSymplecticForm f = form_load(form_path);
  Cocycle c(f, env_parse(env_text),
            convention == "half" ? CocycleConvention::half
                                 : CocycleConvention::full);
  std::ifstream in(expr_path);
  if (!in) throw ParseError("cannot open expression file '" + expr_path + "'");
  std::vector<AlgebraElement> stack;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream is(line);
    std::string op;
    if (!(is >> op)) continue;
    auto need = [&](size_t n) {
      if (stack.size() < n)
        throw ParseError("line " + std::to_string(lineno) +
                         ": stack underflow");
    };
    if (op == "elem") {
      stack.push_back(AlgebraElement::zero(f.group));
    } else if (op == "term") {
      need(1);
      double re, im;
      if (!(is >> re >> im))
        throw ParseError("line " + std::to_string(lineno) + ": bad term");
      std::vector<long long> coords(f.dim());
      for (int i = 0; i < f.dim(); ++i)
        if (!(is >> coords[i]))
          throw ParseError("line " + std::to_string(lineno) + ": bad coords");
      stack.back().add_term(make_element(f.group, coords), Cplx(re, im));
    } else if (op == "mul") {
      need(2);
      AlgebraElement b = std::move(stack.back());
      stack.pop_back();
      AlgebraElement a = std::move(stack.back());
      stack.pop_back();
      stack.push_back(multiply(c, a, b));
    } else if (op == "star") {
      need(1);
      AlgebraElement a = std::move(stack.back());
      stack.pop_back();
      stack.push_back(involute(a));
    } else if (op == "aut") {
      need(1);
      std::vector<std::vector<long long>> rows(f.dim(),
                                               std::vector<long long>(f.dim()));
      for (int i = 0; i < f.dim(); ++i)
        for (int j = 0; j < f.dim(); ++j)
          if (!(is >> rows[i][j]))
            throw ParseError("line " + std::to_string(lineno) + ": bad matrix");
      AlgebraElement a = std::move(stack.back());
      stack.pop_back();
      stack.push_back(
          apply_automorphism(f, GroupMap::from_rows(std::move(rows)), a));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown op '" +
                       op + "'");
    }
  }
  if (stack.empty()) throw ParseError("expression produced no element");
  for (const auto& [g, coeff] : stack.back().terms)
    out << format_complex(coeff) << " * " << g.str() << "\n";
  if (stack.back().terms.empty()) out << "0\n";
  return 0;
}

int cmd_cs_demo(const std::string& theta_text, std::ostream& out) {
  double theta;
  if (theta_text == "sqrt2/2")
    theta = std::sqrt(2.0) / 2.0;
  else if (theta_text == "golden")
    theta = (std::sqrt(5.0) - 1.0) / 2.0;  // fractional part of the ratio
  else
    theta = std::stod(theta_text);
  out << "theta: " << format_double(theta) << "\n";
  out << "forced: omega((n,0)) = 1, extended to Z^2 by gcd-orbit invariance\n";
  try {
    auto w = natural_state_obstruction(theta);
    out << "witness:";
    for (const auto& g : w.elems) out << ' ' << g.str();
    out << "\n";
    out << "min_eigenvalue: " << format_double(w.min_eig) << "\n";
    return 1;  // obstruction found: no natural state
  } catch (const OutOfRange&) {
    GramMatrix probe = obstruction_probe(theta);
    double e = min_eigenvalue(probe);
    out << "rational probe: 3x3 subset {(0,0),(1,0),(0,1)} min_eigenvalue "
        << format_double(e) << (e >= -1e-9 ? " (PSD)" : " (not PSD)") << "\n";
    return e >= -1e-9 ? 0 : 1;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact symplectic twisted group algebra toolkit"};
  app.require_subcommand(1);

  std::string form_path, state_path, env_text, subset, gens_spec = "auto";
  std::string expr_path, theta_text, convention = "full";
  double tol = 1e-9, grid = 0.01;
  long long box = 8;
  bool check = false, exact = false;

  auto* nf = app.add_subcommand("normal-form", "skew normal form of a form");
  nf->add_option("--form", form_path)->required();
  nf->add_flag("--check", check);

  auto* orb = app.add_subcommand("orbits", "symplectic orbit partition");
  orb->add_option("--form", form_path)->required();
  orb->add_option("--gens", gens_spec);
  orb->add_option("--box", box);

  auto* erg = app.add_subcommand("ergodic", "ergodicity of the Sp action");
  erg->add_option("--form", form_path)->required();

  auto* gr = app.add_subcommand("gram", "Gram matrix of a state");
  gr->add_option("--form", form_path)->required();
  gr->add_option("--state", state_path)->required();
  gr->add_option("--env", env_text);
  gr->add_option("--subset", subset)->required();
  gr->add_option("--tol", tol);
  gr->add_option("--convention", convention);

  auto* cs = app.add_subcommand("check-state", "positivity of a state");
  cs->add_option("--form", form_path)->required();
  cs->add_option("--state", state_path)->required();
  cs->add_option("--env", env_text);
  cs->add_option("--subset", subset);
  cs->add_option("--tol", tol);
  cs->add_flag("--exact", exact);
  cs->add_option("--convention", convention);

  auto* ss = app.add_subcommand("search-states", "orbit-constant state search");
  ss->add_option("--form", form_path)->required();
  ss->add_option("--gens", gens_spec);
  ss->add_option("--grid", grid);

  auto* ae = app.add_subcommand("algebra-eval", "evaluate algebra expressions");
  ae->add_option("--form", form_path)->required();
  ae->add_option("--env", env_text);
  ae->add_option("--expr", expr_path)->required();
  ae->add_option("--convention", convention);

  auto* cd = app.add_subcommand("cs-demo", "Chern-Simons obstruction demo");
  cd->add_option("--theta", theta_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (nf->parsed()) return cmd_normal_form(form_path, check, out);
    if (orb->parsed()) return cmd_orbits(form_path, gens_spec, box, out);
    if (erg->parsed()) return cmd_ergodic(form_path, out);
    if (gr->parsed())
      return cmd_gram(form_path, state_path, env_text, subset, tol, convention,
                      out);
    if (cs->parsed())
      return cmd_check_state(form_path, state_path, env_text, subset, tol,
                             exact, convention, out);
    if (ss->parsed()) return cmd_search_states(form_path, gens_spec, grid, out);
    if (ae->parsed())
      return cmd_algebra_eval(form_path, env_text, expr_path, convention, out);
    if (cd->parsed()) return cmd_cs_demo(theta_text, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace stg::cli
