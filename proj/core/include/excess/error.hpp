#pragma once

#include <stdexcept>
#include <string>

namespace excess {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define EXCESS_ERROR(Name)                                  \
    class Name : public Error {                             \
    public:                                                 \
        explicit Name(const std::string& what)              \
            : Error(std::string(#Name ": ") + what) {}      \
    }

EXCESS_ERROR(ParseError);
EXCESS_ERROR(NotDivisible);
EXCESS_ERROR(NotUnitConstantTerm);
EXCESS_ERROR(NotSymmetric);
EXCESS_ERROR(ResidualEll);
EXCESS_ERROR(InvalidTree);
EXCESS_ERROR(NotALeaf);
EXCESS_ERROR(NotIrreducible);
EXCESS_ERROR(MissingSmoothing);
EXCESS_ERROR(GenusMismatch);
EXCESS_ERROR(BadSplit);
EXCESS_ERROR(RankTooLarge);

#undef EXCESS_ERROR

}  // namespace excess
