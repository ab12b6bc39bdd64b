#include "vcp3/bench.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vcp3::bench {

std::string csv_header() {
  return "family,instance,n,m,width,nice_nodes,size,solve_ms,oracle_ms,oracle_size";
}

std::string to_csv(const Row& row) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << row.family << ',' << row.instance << ',' << row.n << ',' << row.m << ',' << row.width
     << ',' << row.nice_nodes << ',' << row.size << ',' << row.solve_ms << ',' << row.oracle_ms
     << ',' << row.oracle_size;
  return os.str();
}

Row from_csv(const std::string& line) {
  std::istringstream is(line);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(is, field, ',')) fields.push_back(field);
  if (fields.size() != 10) throw std::invalid_argument("csv row needs 10 fields: " + line);
  Row row;
  try {
    row.family = fields[0];
    row.instance = std::stoi(fields[1]);
    row.n = std::stoi(fields[2]);
    row.m = std::stoi(fields[3]);
    row.width = std::stoi(fields[4]);
    row.nice_nodes = std::stoi(fields[5]);
    row.size = std::stoi(fields[6]);
    row.solve_ms = std::stod(fields[7]);
    row.oracle_ms = std::stod(fields[8]);
    row.oracle_size = std::stoi(fields[9]);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed csv row: " + line);
  }
  return row;
}

void write_csv(std::ostream& out, const std::vector<Row>& rows) {
  out << csv_header() << '\n';
  for (const Row& row : rows) out << to_csv(row) << '\n';
}

std::vector<Row> read_csv(std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != csv_header()) throw std::invalid_argument("unexpected csv header: " + line);
      continue;
    }
    rows.push_back(from_csv(line));
  }
  return rows;
}

}  // namespace vcp3::bench
