#pragma once

#include <stdexcept>
#include <string>

namespace reasm {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define REASM_DEFINE_ERROR(Name)                                            \
    struct Name : Error {                                                   \
        explicit Name(const std::string& what = #Name) : Error(what) {}     \
    }

REASM_DEFINE_ERROR(NotThreeRegular);
REASM_DEFINE_ERROR(NotSimple);
REASM_DEFINE_ERROR(DegenerateEmbedding);
REASM_DEFINE_ERROR(NoEdges);
REASM_DEFINE_ERROR(DisconnectedContraction);
REASM_DEFINE_ERROR(Disconnected);
REASM_DEFINE_ERROR(InvalidTree);
REASM_DEFINE_ERROR(TooSmall);
REASM_DEFINE_ERROR(NotEligible);
REASM_DEFINE_ERROR(NotBiconnected);
REASM_DEFINE_ERROR(BadOuterplanarity);
REASM_DEFINE_ERROR(BadParams);
REASM_DEFINE_ERROR(WrongFamily);
REASM_DEFINE_ERROR(DegreeTooLow);
REASM_DEFINE_ERROR(TooLarge);
REASM_DEFINE_ERROR(ParseError);
REASM_DEFINE_ERROR(InternalError);

#undef REASM_DEFINE_ERROR

}  // namespace reasm
