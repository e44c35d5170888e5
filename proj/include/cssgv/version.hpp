#ifndef CSSGV_VERSION_HPP
#define CSSGV_VERSION_HPP

namespace cssgv {

inline constexpr const char* version_string = "0.1.0";

} // namespace cssgv

#endif
