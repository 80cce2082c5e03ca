#ifndef CHEMOPAT_VERSION_HPP
#define CHEMOPAT_VERSION_HPP

namespace chemopat {

inline constexpr const char* kVersion = "0.1.0";

} // namespace chemopat

#endif
