#pragma once

namespace hlab {

inline constexpr const char* version = "0.1.0";

}
