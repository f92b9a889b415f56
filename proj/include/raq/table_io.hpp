#pragma once

#include <string>

#include "raq/left_quasigroup.hpp"

namespace raq {

/*
 * Table file format: '#' starts a comment, blank lines are ignored, the
 * first significant line is the order n, followed by n rows of n integers
 * (1-based elements).
 */
LeftQuasigroup parse_table(const std::string& text);
LeftQuasigroup load_table_file(const std::string& path);
std::string format_table(const LeftQuasigroup& q);

} // namespace raq
