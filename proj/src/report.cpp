#include "vcp3/report.hpp"

#include <sstream>

#include "json.hpp"
#include "vcp3/nice_decomposition.hpp"

namespace vcp3 {

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "problem       " << problem << '\n';
  os << "graph         " << graph_path << " (n=" << vertex_count << ", m=" << edge_count << ")\n";
  os << "width         " << width_used << '\n';
  os << "nodes        ";
  for (int kind = 0; kind < 5; ++kind)
    os << ' ' << node_kind_name(static_cast<NodeKind>(kind)) << '='
       << node_counts[static_cast<std::size_t>(kind)];
  os << '\n';
  os << "convolution   " << convolution << '\n';
  if (k) os << "k             " << *k << '\n';
  if (!required.empty()) {
    os << "required      ";
    for (std::size_t i = 0; i < required.size(); ++i) os << (i ? "," : "") << required[i];
    os << '\n';
  }
  if (problem == "cvcp3") os << "seed          " << seed << "\nrepetitions   " << repetitions << '\n';
  if (decision) os << "answer        " << (*decision ? "YES" : "NO") << '\n';
  if (size) os << "size          " << *size << '\n';
  if (no_solution) os << "answer        no solution\n";
  if (witness) {
    os << "witness      ";
    for (int v : *witness) os << ' ' << v;
    os << '\n';
  }
  os << "time          parse=" << parse_seconds << "s decompose=" << decompose_seconds
     << "s solve=" << solve_seconds << "s\n";
  return os.str();
}

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["problem"] = problem;
  j["graph"] = graph_path;
  j["n"] = vertex_count;
  j["m"] = edge_count;
  j["width"] = width_used;
  nlohmann::json counts;
  for (int kind = 0; kind < 5; ++kind)
    counts[node_kind_name(static_cast<NodeKind>(kind))] =
        node_counts[static_cast<std::size_t>(kind)];
  j["nice_nodes"] = counts;
  j["convolution"] = convolution;
  j["seed"] = seed;
  if (problem == "cvcp3") j["repetitions"] = repetitions;
  if (k) j["k"] = *k;
  if (!required.empty()) j["required"] = required;
  if (decision) j["answer"] = *decision ? "YES" : "NO";
  if (size) j["size"] = *size;
  if (no_solution) j["answer"] = "no solution";
  if (witness) j["witness"] = *witness;
  return j.dump(2) + "\n";
}

}  // namespace vcp3
