#pragma once

#include <iosfwd>
#include <string>

#include "cwc/set_systems.hpp"
#include "cwc/words.hpp"

namespace cwc {

// Code file format: first line "n d w q", then one word per line as n
// space-separated decimal integers, lines sorted lexicographically, LF line
// endings, no trailing whitespace.
void write_code(std::ostream& out, const Code& c);
void write_code_file(const std::string& path, const Code& c);
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);

// Design file format: first line "n b" (order, block count), optional second
// line "groups: ..." as semicolon-separated comma-lists, then one block per
// line as space-separated 0-based points, blocks sorted.
void write_design(std::ostream& out, const SetSystem& s);
void write_design_file(const std::string& path, const SetSystem& s);
SetSystem read_design(std::istream& in);
SetSystem read_design_file(const std::string& path);

}  // namespace cwc
