#pragma once

#include <string>

#include "hkcut/enumerate_types.hpp"
#include "hkcut/terminal_cut.hpp"

namespace hkcut {

/// Serializes an enumeration report with the pinned key order
/// (schema_version, k, opt_value, cut_sets, stats). Reports are byte-stable
/// for a fixed input; measured wall time is only included when requested,
/// because it would break that stability.
std::string report_to_json(const EnumerationReport& report, bool include_millis = false);

/// Terminal-cut result as JSON; vertices 1-indexed to match the file format.
std::string terminal_cut_to_json(const TerminalCutResult& result);

}  // namespace hkcut
