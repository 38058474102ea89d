#ifndef MATCHMINOR_ERROR_HPP
#define MATCHMINOR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mm {

enum class Errc {
    OracleLimitExceeded,
    InvalidMatching,
    DegreeNotTwo,
    NotPerfect,
    TooSmall,
    NoPerfectMatching,
    NotAPartialOrder,
    InvalidDecomposition,
    NotNice,
    NotPrepared,
    OddOrder,
    OddVertexCount,
    NotMatchingCovered,
    NotStronglyConnected,
    ModelInvalid,
    NotContractible,
    InvalidW,
    JoinConditionViolated,
    BoundViolated,
    NotExtendable,
    ParseError,
    Usage,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::OracleLimitExceeded: return "OracleLimitExceeded";
        case Errc::InvalidMatching: return "InvalidMatching";
        case Errc::DegreeNotTwo: return "DegreeNotTwo";
        case Errc::NotPerfect: return "NotPerfect";
        case Errc::TooSmall: return "TooSmall";
        case Errc::NoPerfectMatching: return "NoPerfectMatching";
        case Errc::NotAPartialOrder: return "NotAPartialOrder";
        case Errc::InvalidDecomposition: return "InvalidDecomposition";
        case Errc::NotNice: return "NotNice";
        case Errc::NotPrepared: return "NotPrepared";
        case Errc::OddOrder: return "OddOrder";
        case Errc::OddVertexCount: return "OddVertexCount";
        case Errc::NotMatchingCovered: return "NotMatchingCovered";
        case Errc::NotStronglyConnected: return "NotStronglyConnected";
        case Errc::ModelInvalid: return "ModelInvalid";
        case Errc::NotContractible: return "NotContractible";
        case Errc::InvalidW: return "InvalidW";
        case Errc::JoinConditionViolated: return "JoinConditionViolated";
        case Errc::BoundViolated: return "BoundViolated";
        case Errc::NotExtendable: return "NotExtendable";
        case Errc::ParseError: return "ParseError";
        case Errc::Usage: return "Usage";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

   private:
    Errc code_;
};

}  // namespace mm

#endif
