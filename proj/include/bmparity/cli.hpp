#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bmparity/based_matrix.hpp"

namespace bmparity {

enum class Command { kCompute, kVerify, kFuzz };
enum class InputKind { kNone, kCode, kMatrix, kTable };
enum class OutputFormat { kReport, kStructured };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

struct JobSpec {
  Command command = Command::kCompute;
  InputKind input = InputKind::kNone;
  std::string input_value;  // the code text or a path
  Ring ring = Ring::kZ;
  OutputFormat format = OutputFormat::kReport;
  std::uint64_t seed = 1;
  std::optional<std::size_t> moves;  // verify: 32, fuzz: 20
  std::size_t count = 200;
  std::size_t max_size = 6;
  bool timing = false;  // adds wall-clock time, which breaks byte-stable output
};

int cmd_compute(const JobSpec& job, std::ostream& out, std::ostream& err);
int cmd_verify(const JobSpec& job, std::ostream& out, std::ostream& err);
int cmd_fuzz(const JobSpec& job, std::ostream& out, std::ostream& err);

struct FuzzStatistics {
  std::size_t matrices = 0;
  std::size_t moves = 0;
  std::size_t confluence_checks = 0;
  std::size_t restriction_checks = 0;
  std::size_t zero_tribe_checks = 0;
  std::size_t parity_checks = 0;
  std::vector<std::string> counterexamples;
};

// The fuzzing loop behind cmd_fuzz. Matrix i is drawn from a generator
// seeded by (seed, i), so results do not depend on evaluation order.
FuzzStatistics run_fuzz(Ring ring, std::size_t count, std::size_t max_size, std::size_t moves,
                        std::uint64_t seed);

// Parses argv and dispatches. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bmparity
