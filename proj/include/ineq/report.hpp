#pragma once

// Verification reports and their JSON / text renderings.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ineq {

enum class Status { Confirmed, KnownErratum, Discrepancy };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Confirmed: return "CONFIRMED";
    case Status::KnownErratum: return "KNOWN_ERRATUM";
    case Status::Discrepancy: return "DISCREPANCY";
  }
  return "?";
}

struct VerificationReport {
  std::string claim_id;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  Status status = Status::Confirmed;
  std::string details;
  std::vector<std::int64_t> counterexamples;
  // Only set on KNOWN_ERRATUM reports.
  std::optional<std::string> printed;
  std::optional<std::string> computed;
};

/// Collects counterexamples for a claim and closes it into a report.
class ClaimScan {
 public:
  ClaimScan(std::string claim_id, std::int64_t lo, std::int64_t hi) : claim_id_(std::move(claim_id)), lo_(lo), hi_(hi) {}

  void fail(std::int64_t n, std::string_view why) {
    if (bad_.size() < kMaxRecorded) {
      bad_.push_back(n);
      if (!notes_.empty()) notes_ += "; ";
      notes_ += "n=" + std::to_string(n) + ": " + std::string(why);
    }
    ++failures_;
  }

  bool ok() const noexcept { return failures_ == 0; }

  VerificationReport finish(std::string details) const {
    VerificationReport rep{claim_id_, lo_, hi_, Status::Confirmed, std::move(details), bad_, {}, {}};
    if (!ok()) {
      rep.status = Status::Discrepancy;
      rep.details += " | " + std::to_string(failures_) + " counterexample(s): " + notes_;
    }
    return rep;
  }

 private:
  static constexpr std::size_t kMaxRecorded = 20;
  std::string claim_id_;
  std::int64_t lo_, hi_;
  std::vector<std::int64_t> bad_;
  std::string notes_;
  std::size_t failures_ = 0;
};

inline VerificationReport known_erratum(std::string claim_id, std::int64_t lo, std::int64_t hi, std::string details,
                                        std::string printed, std::string computed) {
  return {std::move(claim_id), lo, hi, Status::KnownErratum, std::move(details), {}, std::move(printed),
          std::move(computed)};
}

inline nlohmann::ordered_json to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["claim_id"] = rep.claim_id;
  j["range"] = {rep.lo, rep.hi};
  j["status"] = to_string(rep.status);
  j["details"] = rep.details;
  j["counterexamples"] = rep.counterexamples;
  if (rep.printed) j["printed"] = *rep.printed;
  if (rep.computed) j["computed"] = *rep.computed;
  return j;
}

inline nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reps) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reps) arr.push_back(to_json(r));
  return arr;
}

inline void write_text(std::ostream& os, const std::vector<VerificationReport>& reps) {
  std::size_t width = 8;
  for (const auto& r : reps) width = std::max(width, r.claim_id.size());
  os << std::left << std::setw(static_cast<int>(width)) << "claim" << "  " << std::setw(15) << "range" << "  "
     << std::setw(13) << "status" << "  details\n";
  for (const auto& r : reps) {
    std::string range = "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
    os << std::setw(static_cast<int>(width)) << r.claim_id << "  " << std::setw(15) << range << "  " << std::setw(13)
       << to_string(r.status) << "  " << r.details;
    if (r.printed) os << " (printed " << *r.printed << ", computed " << r.computed.value_or("?") << ")";
    os << '\n';
  }
  os << std::right;
}

inline std::size_t count_status(const std::vector<VerificationReport>& reps, Status s) {
  return static_cast<std::size_t>(
      std::count_if(reps.begin(), reps.end(), [s](const VerificationReport& r) { return r.status == s; }));
}

}  // namespace ineq
