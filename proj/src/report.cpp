#include "pdd/report.hpp"

#include <sstream>

namespace pdd {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

Check& Report::add(std::string name, Status s, std::string expected, std::string actual, std::string detail) {
  checks.push_back({std::move(name), s, std::move(expected), std::move(actual), std::move(detail), 0.0});
  return checks.back();
}

Check& Report::expect(std::string name, bool ok, std::string expected, std::string actual, std::string detail) {
  return add(std::move(name), ok ? Status::pass : Status::fail, std::move(expected), std::move(actual),
             std::move(detail));
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

nlohmann::ordered_json Report::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["subject"] = subject;
  nlohmann::ordered_json facts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : info) facts[k] = v;
  j["info"] = facts;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["status"] = to_string(c.status);
    r["expected"] = c.expected;
    r["actual"] = c.actual;
    if (!c.detail.empty()) r["detail"] = c.detail;
    if (timing) r["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(r);
  }
  j["summary"] = {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"skip", count(Status::skip)}};
  return j;
}

namespace {

std::string cell(std::string s) {
  for (std::size_t p = 0; (p = s.find('|', p)) != std::string::npos; p += 2) s.replace(p, 1, "\\|");
  for (char& ch : s)
    if (ch == '\n') ch = ' ';
  return s.empty() ? " " : s;
}

}  // namespace

std::string Report::to_markdown(bool timing) const {
  std::ostringstream os;
  os << "## " << command << " " << subject << "\n\n";
  for (const auto& [k, v] : info) os << "- " << k << ": " << v << "\n";
  if (!info.empty()) os << "\n";
  os << "| check | status | expected | actual |" << (timing ? " ms |" : "") << "\n";
  os << "|---|---|---|---|" << (timing ? "---|" : "") << "\n";
  for (const auto& c : checks) {
    os << "| " << cell(c.name) << " | " << to_string(c.status) << " | " << cell(c.expected) << " | "
       << cell(c.actual + (c.detail.empty() ? "" : " (" + c.detail + ")")) << " |";
    if (timing) os << " " << c.elapsed_ms << " |";
    os << "\n";
  }
  os << "\n" << count(Status::pass) << " pass, " << count(Status::fail) << " fail, " << count(Status::skip)
     << " skip\n";
  return os.str();
}

nlohmann::ordered_json combined_json(const std::string& command, const std::vector<Report>& reports, bool timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["reports"] = nlohmann::ordered_json::array();
  std::size_t fail = 0;
  for (const auto& r : reports) {
    j["reports"].push_back(r.to_json(timing));
    fail += r.count(Status::fail);
  }
  j["failures"] = fail;
  return j;
}

std::string combined_markdown(const std::vector<Report>& reports, bool timing) {
  std::ostringstream os;
  for (const auto& r : reports) os << r.to_markdown(timing) << "\n";
  return os.str();
}

}  // namespace pdd
