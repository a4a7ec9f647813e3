#include "eitmech/version.hpp"

#ifndef EITMECH_VERSION
#define EITMECH_VERSION "0.0.0"
#endif

namespace eitmech {

std::string_view version() noexcept { return EITMECH_VERSION; }

}  // namespace eitmech
