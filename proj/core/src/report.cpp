#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "glmn/analysis.hpp"

namespace glmn {

namespace {

constexpr std::size_t kListed = 20;

std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

} // namespace

void VerificationReport::add_violation(std::string what) {
  ++violation_count;
  if (violations.size() < kListed) violations.push_back(std::move(what));
}

void VerificationReport::add_note(std::string what) {
  if (notes.size() < kListed) notes.push_back(std::move(what));
}

void VerificationReport::merge(const VerificationReport& other) {
  checked += other.checked;
  vacuous += other.vacuous;
  violation_count += other.violation_count;
  for (const auto& v : other.violations)
    if (violations.size() < kListed) violations.push_back(v);
  for (const auto& v : other.notes)
    if (notes.size() < kListed) notes.push_back(v);
  for (const auto& [k, v] : other.census)
    census[k] += v;
  seconds += other.seconds;
}

std::string to_json(const std::vector<VerificationReport>& reports, bool with_timing) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["instance"] = r.instance;
    j["passed"] = r.passed();
    j["checked"] = r.checked;
    j["vacuous"] = r.vacuous;
    j["violation_count"] = r.violation_count;
    j["violations"] = r.violations;
    j["notes"] = r.notes;
    j["census"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.census)
      j["census"][k] = v;
    if (with_timing) j["seconds"] = r.seconds;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string to_table(const std::vector<VerificationReport>& reports, bool with_timing) {
  std::ostringstream os;
  std::uint64_t failed = 0;
  for (const auto& r : reports) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.suite << " [" << r.instance << "] checked=" << r.checked
       << " vacuous=" << r.vacuous << " violations=" << r.violation_count;
    if (with_timing) os << " seconds=" << fixed3(r.seconds);
    os << "\n";
    for (const auto& [k, v] : r.census)
      os << "    " << k << " = " << v << "\n";
    for (const auto& v : r.violations)
      os << "    violation: " << v << "\n";
    for (const auto& n : r.notes)
      os << "    note: " << n << "\n";
    if (!r.passed()) ++failed;
  }
  os << (failed == 0 ? "all " + std::to_string(reports.size()) + " suites passed"
                     : std::to_string(failed) + " of " + std::to_string(reports.size()) + " suites failed")
     << "\n";
  return os.str();
}

} // namespace glmn
