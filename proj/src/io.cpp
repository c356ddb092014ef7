#include "cova/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cova {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Text read_text(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line))
    throw std::runtime_error("no string line found in input");
  for (std::size_t i = 0; i < line.size(); ++i)
    if (line[i] < 'a' || line[i] > 'z')
      throw std::runtime_error("invalid character at column " +
                               std::to_string(i + 1) +
                               ": expected lowercase a-z");
  return line;
}

Text read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return read_text(in);
}

std::vector<int> read_array(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line))
    throw std::runtime_error("no array line found in input");
  std::istringstream fields(line);
  std::vector<int> values;
  std::string token;
  while (fields >> token) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw std::runtime_error("malformed array entry: '" + token + "'");
    }
  }
  if (values.empty()) throw std::runtime_error("empty array line");
  return values;
}

std::vector<int> read_array_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return read_array(in);
}

std::string format_array(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace cova
