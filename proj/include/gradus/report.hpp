#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gradus {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Verdict { kVerified, kRefuted, kInconclusiveWindow, kInconclusiveHypothesis };

std::string to_string(Verdict v);
/// 0 verified, 2 refuted, 3 inconclusive.
int exit_code(Verdict v);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<long long>> rows;
};

/// One commuting-square comparison: image dimension of the left map at
/// `degree` against the right map at the aligned degree.
struct Square {
  std::string family;
  int level = 0;
  int degree = 0;
  int aligned_degree = 0;
  long long left = 0;
  long long right = 0;
  bool equal() const { return left == right; }
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string statement;
  std::string fixture;
  std::vector<Table> tables;
  std::vector<Square> squares;
  std::vector<Check> checks;
  // Window and stabilization caveats; any flag blocks "verified".
  std::vector<std::string> flags;
  bool hypothesis_failed = false;
  Verdict verdict = Verdict::kVerified;

  void check(std::string name, bool passed, std::string detail = {});
  void hypothesis(std::string name, bool passed, std::string detail = {});
  void flag(std::string text);
  /// Hypothesis failure, then flags, then failed checks or squares decide.
  void finalize();
};

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);
bool operator==(const Table& a, const Table& b);
bool operator==(const Square& a, const Square& b);
bool operator==(const Check& a, const Check& b);
bool operator==(const VerificationReport& a, const VerificationReport& b);

enum class Format { kText, kJson };

/// Whole document for a set of reports: {"schema": 1, "reports": [...]}.
std::string emit_report(const std::vector<VerificationReport>& reports, Format format);
std::string emit_text(const VerificationReport& r);

}  // namespace gradus
