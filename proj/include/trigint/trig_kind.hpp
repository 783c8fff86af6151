#pragma once

#include <string>
#include <string_view>

namespace trigint {

enum class TrigKind { cos, sin };

inline const char* to_string(TrigKind k) { return k == TrigKind::cos ? "cos" : "sin"; }

}  // namespace trigint
