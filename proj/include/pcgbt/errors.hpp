#ifndef PCGBT_ERRORS_HPP
#define PCGBT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcgbt {

/// Structural and configuration problems are exceptions; domain outcomes
/// (no matching segment, incompatible edge) are Status::Failure instead.
enum class Errc {
    InvalidArgument,
    UnknownExecutor,
    MalformedNode,
    TickBudgetExhausted,
    RunningAtCompletion,
    ManifestError,
    DimensionMismatch,
    DuplicateId,
    MissingFile,
    NoMatch,
    CellOccupied,
    UnknownSegmentId,
    MixedDimensions,
    StartRoomExists,
    NoLayout,
    IoError,
};

constexpr const char* toString(Errc c) {
    switch (c) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::UnknownExecutor: return "UnknownExecutor";
        case Errc::MalformedNode: return "MalformedNode";
        case Errc::TickBudgetExhausted: return "TickBudgetExhausted";
        case Errc::RunningAtCompletion: return "RunningAtCompletion";
        case Errc::ManifestError: return "ManifestError";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::DuplicateId: return "DuplicateId";
        case Errc::MissingFile: return "MissingFile";
        case Errc::NoMatch: return "NoMatch";
        case Errc::CellOccupied: return "CellOccupied";
        case Errc::UnknownSegmentId: return "UnknownSegmentId";
        case Errc::MixedDimensions: return "MixedDimensions";
        case Errc::StartRoomExists: return "StartRoomExists";
        case Errc::NoLayout: return "NoLayout";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

class EngineError : public std::runtime_error {
public:
    EngineError(Errc code, const std::string& message)
        : std::runtime_error(std::string(toString(code)) + ": " + message),
          code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace pcgbt

#endif
