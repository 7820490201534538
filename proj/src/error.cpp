#include "simplicial/error.hpp"

namespace simplicial {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kMalformedInput: return "malformed input";
        case ErrorKind::kParse: return "parse error";
        case ErrorKind::kEncoding: return "encoding error";
        case ErrorKind::kEmptyInput: return "empty input";
        case ErrorKind::kOverflow: return "overflow";
        case ErrorKind::kNotASimplex: return "not a simplex";
        case ErrorKind::kParameter: return "parameter error";
        case ErrorKind::kPrecondition: return "precondition failed";
        case ErrorKind::kLabel: return "label error";
        case ErrorKind::kInfeasible: return "infeasible";
        case ErrorKind::kLookup: return "lookup error";
    }
    return "error";
}

}  // namespace simplicial
