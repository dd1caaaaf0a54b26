#include "maxatsp/ssp.hpp"

#include <algorithm>

namespace maxatsp {

std::vector<std::string> ssp_normalize(const std::vector<std::string>& strings) {
  std::vector<std::string> out;
  for (const auto& s : strings) {
    if (s.empty()) continue;
    bool contained = false;
    for (const auto& t : strings) {
      if (&t == &s) continue;
      if (t.size() > s.size() && t.find(s) != std::string::npos) {
        contained = true;
        break;
      }
      // Among equal strings keep the first occurrence only.
      if (t.size() == s.size() && t == s && &t < &s) {
        contained = true;
        break;
      }
    }
    if (!contained) out.push_back(s);
  }
  return out;
}

int overlap_length(const std::string& a, const std::string& b) {
  int max_k = static_cast<int>(std::min(a.size(), b.size()));
  if (max_k > 0 && a == b) --max_k;  // proper overlap only
  for (int k = max_k; k > 0; --k) {
    if (a.compare(a.size() - k, k, b, 0, k) == 0) return k;
  }
  return 0;
}

}  // namespace maxatsp
