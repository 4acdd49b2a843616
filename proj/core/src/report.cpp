#include "octa/report.hpp"

#include <algorithm>
#include <utility>

namespace octa {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == Status::Fail; });
}

Check& Report::add(std::string claim, std::string reference) {
  Check c;
  c.claim = std::move(claim);
  c.reference = std::move(reference);
  checks.push_back(std::move(c));
  return checks.back();
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

CheckBuilder::CheckBuilder(std::string claim, std::string reference) {
  c_.claim = std::move(claim);
  c_.reference = std::move(reference);
}

void CheckBuilder::expect(bool ok, const std::string& where) {
  ++c_.cases;
  if (!ok && failed_++ == 0) c_.counterexample = where;
}

void CheckBuilder::skip(const std::string& why) {
  if (skipped_++ == 0) c_.note = why;
}

Check CheckBuilder::finish() const {
  Check c = c_;
  if (failed_) c.status = Status::Fail;
  else if (c.cases == 0 && skipped_) c.status = Status::Skipped;
  else c.status = Status::Pass;
  if (skipped_) {
    if (!c.note.empty()) c.note += "; ";
    c.note += std::to_string(skipped_) + " case(s) skipped";
  }
  return c;
}

}  // namespace octa
