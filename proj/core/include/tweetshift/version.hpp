#pragma once

namespace tweetshift {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tweetshift
