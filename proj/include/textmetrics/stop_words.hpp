#pragma once

#include <span>
#include <string_view>

namespace textmetrics {

/// Built-in English function-word list (lowercase).
std::span<const std::string_view> english_stop_words();

}  // namespace textmetrics
