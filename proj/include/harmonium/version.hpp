#pragma once

namespace harmonium {

inline constexpr const char* kVersion = "0.1.0";

#ifdef HARMONIUM_GIT_REV
inline constexpr const char* kGitRev = HARMONIUM_GIT_REV;
#else
inline constexpr const char* kGitRev = "unknown";
#endif

}  // namespace harmonium
