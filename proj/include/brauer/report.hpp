#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

// Structured failure carrying the witness that triggered it.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct ReportEntry {
  std::string check;
  bool pass = false;
  std::string detail;
};

// Line-oriented check report. The records rendering is the stable
// machine-readable form; text is for humans.
class Report {
 public:
  void add(std::string check, bool pass, std::string detail = "") {
    entries_.push_back({std::move(check), pass, std::move(detail)});
  }

  void merge(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  bool ok() const {
    for (const auto& e : entries_)
      if (!e.pass) return false;
    return true;
  }

  std::size_t size() const { return entries_.size(); }
  const std::vector<ReportEntry>& entries() const { return entries_; }

  void render_text(std::ostream& os) const;
  void render_records(std::ostream& os) const;
  std::string records_string() const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace brauer
