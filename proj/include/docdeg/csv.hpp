// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

// Minimal RFC 4180 reader/writer: comma separator, double-quote quoting,
// LF or CRLF line ends.
namespace docdeg::csv {

using Row = std::vector<std::string>;

/// Quotes a field only when it contains a comma, quote, or line break.
std::string quote(std::string_view field);

/// Splits a whole document into rows. Blank lines are skipped.
/// Throws ParseError on an unterminated quoted field.
std::vector<Row> parse(std::string_view text);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Strict numeric field parsing; throws ParseError naming `what`.
double to_double(const std::string& field, const char* what);
long long to_int(const std::string& field, const char* what);

}  // namespace docdeg::csv
