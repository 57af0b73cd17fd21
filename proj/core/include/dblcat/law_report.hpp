#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dblcat {

enum class FailureKind {
  Law,       // both sides are well typed and differ
  Boundary,  // a side could not be formed, or the sides have different boundaries
};

struct Violation {
  std::string law;
  std::vector<std::uint32_t> witness;
  std::string detail;
  FailureKind kind = FailureKind::Law;

  bool operator==(const Violation&) const = default;
};

struct LawTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

// Law instances checked and violations found, in registration order.
// Every failure is counted; only the first `keep_per_law` per law are stored.
class LawReport {
 public:
  using Handle = std::size_t;

  explicit LawReport(std::size_t keep_per_law = 64) : keep_per_law_(keep_per_law) {}

  Handle law(std::string_view name);

  void pass(Handle h) { ++tallies_[h].checked; }
  void fail(Handle h, std::vector<std::uint32_t> witness, std::string detail,
            FailureKind kind = FailureKind::Law);
  void skip(Handle h, std::uint64_t n = 1) { tallies_[h].skipped += n; }

  bool empty() const { return failures_ == 0; }
  std::uint64_t failure_count() const { return failures_; }
  std::uint64_t instances_checked() const;
  std::uint64_t instances_skipped() const;

  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<LawTally>& tallies() const { return tallies_; }
  const LawTally* tally(std::string_view name) const;

  bool has_violation(std::string_view law) const;
  bool has_violation_prefix(std::string_view prefix) const;

  // Appends another report's laws and violations after this one's.
  void merge(const LawReport& other);

  // Violations ordered by law name, then witness ids.
  std::vector<Violation> sorted_violations() const;

  std::string to_text() const;

 private:
  std::size_t keep_per_law_;
  std::vector<LawTally> tallies_;
  std::vector<std::size_t> stored_per_law_;
  std::vector<Violation> violations_;
  std::uint64_t failures_ = 0;
};

// Result of a decision procedure. `clause` names the first failing condition.
struct Verdict {
  bool holds = true;
  std::string clause;
  std::vector<std::uint32_t> witness;
  std::string detail;

  static Verdict yes() { return {}; }
  static Verdict no(std::string clause, std::vector<std::uint32_t> witness, std::string detail = {}) {
    return {false, std::move(clause), std::move(witness), std::move(detail)};
  }
  explicit operator bool() const { return holds; }
};

struct LawInfo {
  std::string_view name;
  std::string_view statement;
  // Standard textbook form chosen where the source leaves the exact shape open.
  bool standard_form = false;
};

const std::vector<LawInfo>& law_registry();
const LawInfo* find_law(std::string_view name);

}  // namespace dblcat
