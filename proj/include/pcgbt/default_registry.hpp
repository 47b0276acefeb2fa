#ifndef PCGBT_DEFAULT_REGISTRY_HPP
#define PCGBT_DEFAULT_REGISTRY_HPP

#include "pcgbt/engine.hpp"

namespace pcgbt {

/// Registry with every built-in executor: core conditions and actions,
/// placement actions, and dungeon actions.
ExecutorRegistry makeDefaultRegistry();

}  // namespace pcgbt

#endif
