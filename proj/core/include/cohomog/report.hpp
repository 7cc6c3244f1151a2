#pragma once

#include <optional>
#include <ostream>

#include "cohomog/specfile.hpp"
#include "cohomog/verify.hpp"

namespace cohomog {

struct RunOptions {
  int max_degree = 40;
  bool verify = false;
  int trials = 50;
  unsigned seed = 0;
  enum class Format { Text, Machine };
  Format format = Format::Text;
  std::string out;  // empty: stdout
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitValidationFailure = 3;
inline constexpr int kExitVerificationMismatch = 4;

std::string text_report(const ActionSpec& spec, const RingPresentation& pres,
                        const VerificationReport* verification);
// Machine format; schema in docs/formats.md. Series coefficients are
// exact decimal rational strings.
std::string machine_report(const ActionSpec& spec,
                           const RingPresentation& pres,
                           const VerificationReport* verification);

// parse -> validate -> classify/present -> (optional) verify -> emit.
// Returns one of the kExit* codes; diagnostics go to `err`.
int run(const std::string& path, const RunOptions& options,
        std::ostream& out_stream, std::ostream& err);

}  // namespace cohomog
