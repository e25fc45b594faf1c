#pragma once

#include <CLI11.hpp>

namespace cli {

// Each register_* adds a command group; the callbacks store the exit code.
void register_fw(CLI::App& app, int& exit_code);
void register_bcfw(CLI::App& app, int& exit_code);
void register_cs(CLI::App& app, int& exit_code);
void register_nu(CLI::App& app, int& exit_code);
void register_measure(CLI::App& app, int& exit_code);
void register_selftest(CLI::App& app, int& exit_code);

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitVerification = 4;

}  // namespace cli
