#include "brauer/report.hpp"

#include <sstream>

namespace brauer {

void Report::render_text(std::ostream& os) const {
  int failed = 0;
  for (const auto& e : entries_) {
    os << (e.pass ? "  ok  " : " FAIL ") << e.check;
    if (!e.detail.empty()) os << ": " << e.detail;
    os << "\n";
    if (!e.pass) ++failed;
  }
  os << entries_.size() << " checks, " << failed << " failed\n";
}

void Report::render_records(std::ostream& os) const {
  os << "brauer-report\t1\n";
  for (const auto& e : entries_) {
    os << "check\t" << e.check << "\t" << (e.pass ? "pass" : "fail") << "\t" << e.detail << "\n";
  }
  os << "summary\t" << entries_.size() << "\t" << (ok() ? "pass" : "fail") << "\n";
}

std::string Report::records_string() const {
  std::ostringstream os;
  render_records(os);
  return os.str();
}

}  // namespace brauer
