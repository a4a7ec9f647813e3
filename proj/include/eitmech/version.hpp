#pragma once

#include <string_view>

namespace eitmech {

std::string_view version() noexcept;

}  // namespace eitmech
