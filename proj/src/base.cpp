#include "oidal/base.hpp"

#include <cstring>

namespace oidal {

namespace {
std::size_t g_cap = [] {
  if (const char* env = std::getenv("OIDAL_MAX_SIZE")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return static_cast<std::size_t>(20000);
}();
}  // namespace

std::size_t size_cap() { return g_cap; }
void set_size_cap(std::size_t cap) { g_cap = cap; }

void require_under_cap(std::size_t morphism_count, const std::string& what) {
  if (morphism_count > g_cap) {
    throw CapExceeded(what + " would have " + std::to_string(morphism_count) +
                      " morphisms, above the cap of " + std::to_string(g_cap));
  }
}

bool is_tuple_name(const std::string& s) {
  return s.size() >= 2 && s.front() == '(' && s.back() == ')';
}

std::vector<std::string> name_components(const std::string& s) {
  if (!is_tuple_name(s)) return {s};
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string make_tuple_name(const std::vector<std::string>& parts) {
  if (parts.empty()) return "()";
  if (parts.size() == 1) return parts.front();
  return "(" + join(parts, ",") + ")";
}

std::string pair_name(const std::string& a, const std::string& b) {
  std::vector<std::string> parts = name_components(a);
  for (auto& p : name_components(b)) parts.push_back(p);
  return make_tuple_name(parts);
}

bool valid_user_id(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (c < 0x2D) return false;  // controls, space, parens, comma etc.
    if (c == '|') return false;
  }
  for (const char* seq : {"\xe2\x9f\xa8", "\xe2\x9f\xa9", "\xe2\x86\x92"}) {
    if (s.find(seq) != std::string::npos) return false;  // angle brackets, arrow
  }
  return true;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string ValidationReport::summary() const {
  if (ok()) return subject + ": ok";
  std::string out = subject + ": " + std::to_string(violations.size()) + " violation(s)";
  for (const auto& v : violations) out += "\n  " + v.law + " at " + v.witness;
  return out;
}

void require_valid(const ValidationReport& report) {
  if (!report.ok()) throw InputError(report.summary());
}

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Exact: return "exact";
    case LawStatus::UptoIso: return "upto-iso";
    default: return "fail";
  }
}

}  // namespace oidal
