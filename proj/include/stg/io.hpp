#ifndef STG_IO_HPP
#define STG_IO_HPP

#include <iosfwd>
#include <string>

#include "stg/states.hpp"

namespace stg {

// Form file: a "group:" header, then one "sigma[i][j] = <tvalue>" line per
// upper-triangle entry (0-based indices); omitted entries are zero, the
// lower triangle is derived by skewness.  '#' starts a comment.
PreSymplecticForm form_parse(std::istream& in);
PreSymplecticForm form_load(const std::string& path);
std::string form_print(const PreSymplecticForm& f);

// State file: "orbit (coords) = <real>" lines plus "default = <real>".
State state_parse(const FgAbelianGroup& G, std::istream& in);
State state_load(const FgAbelianGroup& G, const std::string& path);

// "t1=0.7071067811865476,t2=0.3"
SymbolEnv env_parse(const std::string& text);

// exact rational from a plain decimal literal like "-0.25"
Rat rat_from_decimal(const std::string& text);

// locale-independent, 12 significant digits
std::string format_double(double x);
std::string format_complex(const Cplx& z);

std::vector<GroupMap> gens_load(const FgAbelianGroup& G,
                                const std::string& path);

}  // namespace stg

#endif
