#ifndef COYOTE_VERSION_HPP
#define COYOTE_VERSION_HPP

namespace coyote {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
