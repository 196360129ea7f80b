#include "gradus/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "gradus/errors.hpp"

namespace gradus {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return "verified";
    case Verdict::kRefuted: return "refuted-on-fixture";
    case Verdict::kInconclusiveWindow: return "inconclusive(window)";
    case Verdict::kInconclusiveHypothesis: return "inconclusive(hypothesis)";
  }
  return "unknown";
}

namespace {

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::kVerified, Verdict::kRefuted, Verdict::kInconclusiveWindow,
                    Verdict::kInconclusiveHypothesis})
    if (to_string(v) == s) return v;
  throw InputError("unknown verdict '" + s + "'");
}

}  // namespace

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return 0;
    case Verdict::kRefuted: return 2;
    default: return 3;
  }
}

void VerificationReport::check(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

void VerificationReport::hypothesis(std::string name, bool passed, std::string detail) {
  checks.push_back({"hypothesis: " + name, passed, std::move(detail)});
  if (!passed) hypothesis_failed = true;
}

void VerificationReport::flag(std::string text) {
  if (std::find(flags.begin(), flags.end(), text) == flags.end()) flags.push_back(std::move(text));
}

void VerificationReport::finalize() {
  const bool failed = std::any_of(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }) ||
                      std::any_of(squares.begin(), squares.end(), [](const Square& s) { return !s.equal(); });
  if (hypothesis_failed)
    verdict = Verdict::kInconclusiveHypothesis;
  else if (!flags.empty())
    verdict = Verdict::kInconclusiveWindow;
  else if (failed)
    verdict = Verdict::kRefuted;
  else
    verdict = Verdict::kVerified;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["statement"] = r.statement;
  j["fixture"] = r.fixture;
  j["tables"] = Json::array();
  for (const auto& t : r.tables) {
    Json tj;
    tj["name"] = t.name;
    tj["columns"] = t.columns;
    tj["rows"] = t.rows;
    j["tables"].push_back(std::move(tj));
  }
  j["squares"] = Json::array();
  for (const auto& s : r.squares) {
    Json sj;
    sj["family"] = s.family;
    sj["level"] = s.level;
    sj["degree"] = s.degree;
    sj["aligned_degree"] = s.aligned_degree;
    sj["left"] = s.left;
    sj["right"] = s.right;
    sj["equal"] = s.equal();
    j["squares"].push_back(std::move(sj));
  }
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    j["checks"].push_back(std::move(cj));
  }
  j["flags"] = r.flags;
  j["verdict"] = to_string(r.verdict);
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.statement = j.at("statement").get<std::string>();
  r.fixture = j.at("fixture").get<std::string>();
  for (const auto& tj : j.at("tables"))
    r.tables.push_back({tj.at("name").get<std::string>(), tj.at("columns").get<std::vector<std::string>>(),
                        tj.at("rows").get<std::vector<std::vector<long long>>>()});
  for (const auto& sj : j.at("squares"))
    r.squares.push_back({sj.at("family").get<std::string>(), sj.at("level").get<int>(), sj.at("degree").get<int>(),
                         sj.at("aligned_degree").get<int>(), sj.at("left").get<long long>(),
                         sj.at("right").get<long long>()});
  for (const auto& cj : j.at("checks")) {
    Check c{cj.at("name").get<std::string>(), cj.at("passed").get<bool>(), cj.at("detail").get<std::string>()};
    if (c.name.rfind("hypothesis: ", 0) == 0 && !c.passed) r.hypothesis_failed = true;
    r.checks.push_back(std::move(c));
  }
  r.flags = j.at("flags").get<std::vector<std::string>>();
  r.verdict = verdict_from(j.at("verdict").get<std::string>());
  return r;
}

bool operator==(const Table& a, const Table& b) {
  return a.name == b.name && a.columns == b.columns && a.rows == b.rows;
}
bool operator==(const Square& a, const Square& b) {
  return a.family == b.family && a.level == b.level && a.degree == b.degree && a.aligned_degree == b.aligned_degree &&
         a.left == b.left && a.right == b.right;
}
bool operator==(const Check& a, const Check& b) {
  return a.name == b.name && a.passed == b.passed && a.detail == b.detail;
}
bool operator==(const VerificationReport& a, const VerificationReport& b) {
  return a.statement == b.statement && a.fixture == b.fixture && a.tables == b.tables && a.squares == b.squares &&
         a.checks == b.checks && a.flags == b.flags && a.hypothesis_failed == b.hypothesis_failed &&
         a.verdict == b.verdict;
}

std::string emit_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "== " << r.statement << "\n";
  os << "fixture: " << r.fixture << "\n";
  os << "verdict: " << to_string(r.verdict) << "\n";
  for (const auto& t : r.tables) {
    os << "table " << t.name << "\n";
    std::vector<std::size_t> widths;
    for (const auto& c : t.columns) widths.push_back(std::max<std::size_t>(c.size(), 4));
    for (const auto& row : t.rows)
      for (std::size_t k = 0; k < row.size() && k < widths.size(); ++k)
        widths[k] = std::max(widths[k], std::to_string(row[k]).size());
    os << " ";
    for (std::size_t k = 0; k < t.columns.size(); ++k) os << " " << std::setw(static_cast<int>(widths[k])) << t.columns[k];
    os << "\n";
    for (const auto& row : t.rows) {
      os << " ";
      for (std::size_t k = 0; k < row.size(); ++k)
        os << " " << std::setw(static_cast<int>(k < widths.size() ? widths[k] : 4)) << row[k];
      os << "\n";
    }
  }
  if (!r.squares.empty()) {
    const auto bad = std::count_if(r.squares.begin(), r.squares.end(), [](const Square& s) { return !s.equal(); });
    os << "squares: " << r.squares.size() << " compared, " << bad << " unequal\n";
    for (const auto& s : r.squares)
      if (!s.equal())
        os << "  " << s.family << " level " << s.level << " degree " << s.degree << ": " << s.left
           << " != " << s.right << " (aligned degree " << s.aligned_degree << ")\n";
  }
  os << "checks:\n";
  for (const auto& c : r.checks)
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  if (!r.flags.empty()) {
    os << "flags:\n";
    for (const auto& f : r.flags) os << "  " << f << "\n";
  }
  return os.str();
}

std::string emit_report(const std::vector<VerificationReport>& reports, Format format) {
  if (format == Format::kJson) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["reports"] = Json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const auto& r : reports) out += emit_text(r);
  return out;
}

}  // namespace gradus
