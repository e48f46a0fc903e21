#pragma once

#include <string>

namespace gm {

// Whole-file read; throws Error(IO_ERROR) when the file cannot be opened.
std::string read_file(const std::string& path);

// Write via a temporary sibling file plus rename, so concurrent readers (and
// crashed runs) never observe a half-written file. Throws Error(IO_ERROR).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace gm
