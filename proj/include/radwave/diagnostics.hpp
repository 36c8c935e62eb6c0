#pragma once

#include <functional>
#include <string_view>

namespace radwave {

using WarningHandler = std::function<void(std::string_view)>;

/// Replaces the sink for non-fatal warnings; returns the previous one.
/// The default sink writes to stderr.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(std::string_view message);

} // namespace radwave
