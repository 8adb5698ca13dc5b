#pragma once

#include <string>

namespace nldg {

// 4 significant digits, scientific: 1.697e-03
std::string format_error(double v);
// 3 decimals: 2.001
std::string format_order(double v);
// general, n significant digits
std::string format_sig(double v, int n);

// Numbers with optional pi factors: "0.5", "pi/6", "2pi", "2*pi/3", "1e-6", "-pi".
double parse_real_expr(const std::string& s);

// Write via a temporary file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace nldg
