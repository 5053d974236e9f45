// log.hpp -- tiny leveled logging, controlled by the RMC_LOG environment
// variable (error|info|debug).

#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace rmc {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("RMC_LOG");
    if (!env) return LogLevel::Error;
    std::string s(env);
    if (s == "debug") return LogLevel::Debug;
    if (s == "info") return LogLevel::Info;
    return LogLevel::Error;
  }();
  return level;
}

}  // namespace rmc

#define RMC_LOG_AT(level, tag, expr)                         \
  do {                                                       \
    if (static_cast<int>(rmc::log_level()) >=                \
        static_cast<int>(level)) {                           \
      std::ostringstream rmc_log_stream_;                    \
      rmc_log_stream_ << expr;                               \
      std::cerr << "[" tag "] " << rmc_log_stream_.str()     \
                << std::endl;                                \
    }                                                        \
  } while (0)

#define RMC_LOG_ERROR(expr) RMC_LOG_AT(rmc::LogLevel::Error, "error", expr)
#define RMC_LOG_INFO(expr) RMC_LOG_AT(rmc::LogLevel::Info, "info", expr)
#define RMC_LOG_DEBUG(expr) RMC_LOG_AT(rmc::LogLevel::Debug, "debug", expr)
