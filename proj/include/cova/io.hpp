#ifndef COVA_IO_HPP
#define COVA_IO_HPP

#include <iosfwd>
#include <string>

#include "cova/core.hpp"

namespace cova {

// First non-comment line of a string file: lowercase letters a-z only,
// '#'-prefixed lines ignored. Throws std::runtime_error on bad input.
Text read_text(std::istream& in);
Text read_text_file(const std::string& path);

// First non-comment line of an array file: space-separated decimals,
// position 1 first.
std::vector<int> read_array(std::istream& in);
std::vector<int> read_array_file(const std::string& path);

// Space-separated decimal rendering, no trailing newline.
std::string format_array(const std::vector<int>& values);

}  // namespace cova

#endif
