#pragma once

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace alpharoot {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);
std::string format_int(std::int64_t v);

// Comma-separated output with '#'-prefixed comment header lines. Numeric
// cells round-trip IEEE-754; identical data yields byte-identical files.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path);
    void comment(const std::string& line);                    // "# <line>"
    void header(const std::vector<std::string>& columns);     // column names
    void row(const std::vector<double>& values);
    void row(std::initializer_list<std::string> cells);
    void close();                                             // throws on failure

  private:
    std::ofstream out_;
    std::string path_;
};

}  // namespace alpharoot
