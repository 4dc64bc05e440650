#include "farey/error.hpp"

namespace farey {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidDenominator: return "InvalidDenominator";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::RankOutOfRange: return "RankOutOfRange";
        case ErrorCode::OutOfTable: return "OutOfTable";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NoObject: return "NoObject";
        case ErrorCode::DegenerateObject: return "DegenerateObject";
        case ErrorCode::OpenPolygonUnsupported: return "OpenPolygonUnsupported";
        case ErrorCode::InputFormat: return "InputFormat";
        case ErrorCode::CacheRejected: return "CacheRejected";
    }
    return "Unknown";
}

}  // namespace farey
