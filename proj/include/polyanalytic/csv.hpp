#pragma once

#include <iosfwd>
#include <string>

#include "polyanalytic/experiments.hpp"

namespace polyanalytic {

/// printf "%.17g": round-trips every double.
std::string format_double(double x);

/// Quotes a field if it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

// Each writer emits a header row then data rows, sorted by r (then m).
// Throws std::runtime_error if the stream fails.
void emit_csv(const NormResult& result, std::ostream& out);
void emit_csv(const ConvergenceReport& report, std::ostream& out);
void emit_csv(const LimsupReport& report, std::ostream& out);
void emit_csv(const ApproxReport& report, std::ostream& out);
void emit_csv(const SuiteSummary& summary, std::ostream& out);
void emit_csv(const ConditionCheck& check, std::ostream& out);

}  // namespace polyanalytic
