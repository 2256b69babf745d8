// Check records and their JSON / markdown serialisation.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pdd {

enum class Status { pass, fail, skip };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string expected;
  std::string actual;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct Report {
  std::string command;
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> info;  // ordered key/value facts

  Check& add(std::string name, Status s, std::string expected = "", std::string actual = "",
             std::string detail = "");
  // pass when ok, fail otherwise
  Check& expect(std::string name, bool ok, std::string expected = "", std::string actual = "",
                std::string detail = "");
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }

  nlohmann::ordered_json to_json(bool timing = false) const;
  std::string to_markdown(bool timing = false) const;
};

inline constexpr int kReportSchemaVersion = 1;

// Several reports under one document.
nlohmann::ordered_json combined_json(const std::string& command, const std::vector<Report>& reports,
                                     bool timing = false);
std::string combined_markdown(const std::vector<Report>& reports, bool timing = false);

}  // namespace pdd
