#include "morseforge/log.hpp"

#include <cstdlib>
#include <iostream>

namespace morseforge {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("MORSE_FORGE_LOG");
        if (env == nullptr) return LogLevel::Quiet;
        std::string value(env);
        if (value == "trace") return LogLevel::Trace;
        if (value == "info") return LogLevel::Info;
        return LogLevel::Quiet;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) std::cerr << "[morseforge] " << msg << "\n";
}

void log_trace(const std::string& msg) {
    if (log_level() >= LogLevel::Trace) std::cerr << "[morseforge:trace] " << msg << "\n";
}

}  // namespace morseforge
