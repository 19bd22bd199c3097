#include "base.h"

namespace config {

constexpr bool kEnableVulkan = true;
constexpr bool kEnableMetal = false;
constexpr bool kEnableGhost = true;
const int kRetryBudget = 7;

}  // namespace config
