#ifndef SSNC_COMMANDS_HPP
#define SSNC_COMMANDS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssnc/formats.hpp"
#include "ssnc/generators.hpp"
#include "ssnc/report.hpp"

namespace ssnc {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // usage, parse and I/O errors
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitDivergence = 4;

struct CommandResult {
  int exit_code = kExitOk;
  Json report;          // empty for convert
  std::string text;     // convert output
};

struct InputRef {
  std::string name;     // file name or "-"
  GraphDocument doc;
};

/// Reads a file ("-" for stdin) and parses it. Throws Error{Io} or ParseError.
InputRef load_input(const std::string& path, std::optional<GraphFormat> format);

struct CheckOptions {
  std::optional<std::size_t> k;  // probe only this k; default 2..8
  std::optional<std::size_t> m;  // also report m-freeness
};

CommandResult cmd_check(const InputRef& input, const CheckOptions& options);

CommandResult cmd_trace(const InputRef& input, std::size_t k, bool skip_precheck);

CommandResult cmd_enumerate(std::size_t n, const std::vector<Filter>& filters, HuntTarget target,
                            const HuntOptions& options);

CommandResult cmd_hunt(const GenSpec& spec, HuntTarget target, const HuntOptions& options);

CommandResult cmd_convert(const InputRef& input, GraphFormat to);

}  // namespace ssnc

#endif  // SSNC_COMMANDS_HPP
