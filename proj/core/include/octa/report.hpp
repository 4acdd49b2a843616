#pragma once

// Structured verification reports: one record per checked identity.

#include <cstddef>
#include <string>
#include <vector>

namespace octa {

enum class Status { Pass, Fail, Skipped };

const char* to_string(Status s);

struct Check {
  std::string claim;
  std::string reference;  // short name of the identity being checked
  Status status = Status::Pass;
  std::size_t cases = 0;  // number of lattice points / instances compared
  std::string counterexample;
  std::string note;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool ok() const;
  std::size_t failures() const;
  Check& add(std::string claim, std::string reference);
  void merge(const Report& other);
};

// Accumulates a single identity over many cases, remembering the first
// failure.
class CheckBuilder {
 public:
  CheckBuilder(std::string claim, std::string reference);
  void expect(bool ok, const std::string& where);
  void skip(const std::string& why);
  Check finish() const;
  bool ok() const { return failed_ == 0; }

 private:
  Check c_;
  std::size_t failed_ = 0, skipped_ = 0;
};

}  // namespace octa
