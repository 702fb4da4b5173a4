#pragma once

// Deterministic CSV emission: RFC-4180-style, header row first, '.' decimal
// point, LF line endings, numbers printed to a configured count of
// significant digits (shortest form, via %g).

#include <ostream>
#include <string>
#include <vector>

namespace qentropy::csv {

inline constexpr int default_precision = 9;
inline constexpr const char* precision_env_var = "QENTROPY_PRECISION";

// Significant digits to use: the environment override when set and valid
// (clamped to [1, 17]), otherwise the default of 9.
int configured_precision();

// One double at the given number of significant digits.
std::string format_number(double value, int precision);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Header then rows, LF-terminated. Empty tables and ragged rows are rejected.
void write(const Table& table, std::ostream& out);

}  // namespace qentropy::csv
