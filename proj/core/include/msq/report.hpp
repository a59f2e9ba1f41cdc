#pragma once

#include <string>
#include <vector>

namespace msq {

// Outcome of an exhaustive property check: pass/fail, how many instances
// were examined, and up to 32 human-readable descriptions of failures.
struct CheckReport {
  bool pass = true;
  long checked = 0;
  std::vector<std::string> witnesses;

  void fail(const std::string& w) {
    pass = false;
    if (witnesses.size() < 32) witnesses.push_back(w);
  }

  void absorb(const CheckReport& other) {
    checked += other.checked;
    if (!other.pass) {
      pass = false;
      for (const auto& w : other.witnesses)
        if (witnesses.size() < 32) witnesses.push_back(w);
    }
  }
};

}  // namespace msq
