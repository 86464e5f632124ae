#include <json.hpp>

#include "pga/cli.hpp"

namespace pga::cli {

std::string json_report(const RunReport& report) {
  nlohmann::ordered_json root;
  root["program"] = report.program_path;
  root["normalized"] = report.normalized;
  root["mass"] = report.mass.to_string();

  nlohmann::ordered_json queries = nlohmann::ordered_json::array();
  for (const QueryResult& q : report.queries) {
    nlohmann::ordered_json entry;
    entry["kind"] = q.kind;
    entry["target"] = q.target;
    if (q.kind == "marginal") {
      nlohmann::ordered_json table;
      for (const auto& [key, prob] : q.table) table[key] = prob.to_string();
      entry["value"] = std::move(table);
    } else {
      entry["value"] = q.value.to_string();
    }
    entry["residual"] = q.residual.to_string();
    queries.push_back(std::move(entry));
  }
  root["queries"] = std::move(queries);
  return root.dump(2) + "\n";
}

}  // namespace pga::cli
