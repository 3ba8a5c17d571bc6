#ifndef STG_ERRORS_HPP
#define STG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stg {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define STG_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                          \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

STG_DEFINE_ERROR(DimensionMismatch);
STG_DEFINE_ERROR(UnboundSymbol);
STG_DEFINE_ERROR(NotSkew);
STG_DEFINE_ERROR(NotRankOne);
STG_DEFINE_ERROR(NotFinite);
STG_DEFINE_ERROR(DegenerateForm);
STG_DEFINE_ERROR(NotFoundWithinBound);
STG_DEFINE_ERROR(NonSymplecticGenerator);
STG_DEFINE_ERROR(NonSymplecticMap);
STG_DEFINE_ERROR(ZeroVector);
STG_DEFINE_ERROR(DegenerateRestriction);
STG_DEFINE_ERROR(HalfConventionOnTorsion);
STG_DEFINE_ERROR(NonHermitianState);
STG_DEFINE_ERROR(OutOfRange);
STG_DEFINE_ERROR(NonDegenerateForm);
STG_DEFINE_ERROR(GroupTooLarge);
STG_DEFINE_ERROR(InconsistentConstraint);
STG_DEFINE_ERROR(NoWitnessFound);
STG_DEFINE_ERROR(ParseError);

#undef STG_DEFINE_ERROR

}  // namespace stg

#endif
