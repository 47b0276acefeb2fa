#include "pcgbt/default_registry.hpp"

#include "pcgbt/dungeon.hpp"
#include "pcgbt/placement.hpp"

namespace pcgbt {

ExecutorRegistry makeDefaultRegistry() {
    ExecutorRegistry registry;
    registerCoreExecutors(registry);
    registerPlacementExecutors(registry);
    registerDungeonExecutors(registry);
    return registry;
}

}  // namespace pcgbt
