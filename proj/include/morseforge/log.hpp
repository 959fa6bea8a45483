#pragma once

#include <string>

namespace morseforge {

/// Log verbosity, controlled by the MORSE_FORGE_LOG environment variable:
/// "quiet" (default), "info", or "trace". Messages go to stderr so that
/// file and stdout artifacts stay byte-stable.
enum class LogLevel { Quiet = 0, Info = 1, Trace = 2 };

LogLevel log_level();
void log_info(const std::string& msg);
void log_trace(const std::string& msg);

}  // namespace morseforge
