#ifndef PCGBT_STATUS_HPP
#define PCGBT_STATUS_HPP

#include <cstdint>

namespace pcgbt {

/// Result of ticking a node. Leaves in this project only ever return Success
/// or Failure; Running is part of the engine contract for completeness.
enum class Status : uint8_t { Success = 0, Failure = 1, Running = 2 };

constexpr const char* toString(Status s) {
    switch (s) {
        case Status::Success: return "SUCCESS";
        case Status::Failure: return "FAILURE";
        case Status::Running: return "RUNNING";
    }
    return "UNKNOWN";
}

}  // namespace pcgbt

#endif
