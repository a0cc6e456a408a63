#ifndef QFR_VERSION_HPP
#define QFR_VERSION_HPP

namespace qfr {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qfr

#endif
