#pragma once

#include <string>

namespace bench {

// Renders a wide data file (header "T <label>...") as a static SVG line chart:
// one curve per column, legend outside the plot on the right, axes labeled
// "Time (s)" and "Expected Utility". Output bytes depend only on the input.
// Malformed input raises std::invalid_argument naming the offending line.
void emit_plot(const std::string& data_path, const std::string& output_path,
               const std::string& title = "");

}  // namespace bench
