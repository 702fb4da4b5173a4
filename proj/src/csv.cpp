#include "qentropy/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace qentropy::csv {

int configured_precision() {
    const char* raw = std::getenv(precision_env_var);
    if (raw == nullptr || *raw == '\0') return default_precision;
    char* end = nullptr;
    const long parsed = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0') return default_precision;
    if (parsed < 1) return 1;
    if (parsed > 17) return 17;
    return static_cast<int>(parsed);
}

std::string format_number(double value, int precision) {
    if (precision < 1) precision = 1;
    if (precision > 17) precision = 17;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

void write(const Table& table, std::ostream& out) {
    if (table.header.empty() || table.rows.empty()) {
        throw std::invalid_argument("csv::write: empty table");
    }
    auto emit_row = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) out << ',';
            out << fields[i];
        }
        out << '\n';
    };
    emit_row(table.header);
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) {
            throw std::invalid_argument("csv::write: ragged row");
        }
        emit_row(row);
    }
}

}  // namespace qentropy::csv
