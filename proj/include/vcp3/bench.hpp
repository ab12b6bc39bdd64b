#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vcp3::bench {

struct Row {
  std::string family;
  int instance = 0;
  int n = 0;
  int m = 0;
  int width = 0;
  int nice_nodes = 0;
  int size = 0;
  double solve_ms = 0;
  double oracle_ms = -1;  // -1: oracle not run
  int oracle_size = -1;

  bool operator==(const Row&) const = default;
};

std::string csv_header();
std::string to_csv(const Row& row);
Row from_csv(const std::string& line);  // throws std::invalid_argument on malformed input

void write_csv(std::ostream& out, const std::vector<Row>& rows);
std::vector<Row> read_csv(std::istream& in);

}  // namespace vcp3::bench
