#pragma once

namespace kspace {

inline constexpr const char* version = "0.1.0";

}
