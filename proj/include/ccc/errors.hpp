#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CCC_ERROR(Name)              \
  struct Name : Error {              \
    using Error::Error;              \
  }

CCC_ERROR(DuplicateLabel);
CCC_ERROR(AntisymmetryViolation);
CCC_ERROR(UnknownLabel);
CCC_ERROR(NotATopology);
CCC_ERROR(SizeCap);
CCC_ERROR(HypothesisViolated);
CCC_ERROR(PreconditionViolated);
CCC_ERROR(OrderInconsistent);
CCC_ERROR(TemplateIllFormed);
CCC_ERROR(NotDirected);
CCC_ERROR(BaseExtractionIncomplete);
CCC_ERROR(NotDetermined);
CCC_ERROR(Unsupported);

#undef CCC_ERROR

struct LawViolation : Error {
  LawViolation(std::string law_name, std::string witness)
      : Error(law_name + " violated: " + witness), law(std::move(law_name)),
        counterexample(std::move(witness)) {}
  std::string law;
  std::string counterexample;
};

struct ParseError : Error {
  ParseError(std::size_t l, std::size_t c, std::string what_expected)
      : Error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": expected " +
              what_expected),
        line(l), column(c), expected(std::move(what_expected)) {}
  std::size_t line;
  std::size_t column;
  std::string expected;
};

struct ResolveError : Error {
  ResolveError(std::size_t l, std::string unresolved)
      : Error("line " + std::to_string(l) + ": unresolved name '" + unresolved + "'"), line(l),
        name(std::move(unresolved)) {}
  std::size_t line;
  std::string name;
};

}  // namespace ccc
