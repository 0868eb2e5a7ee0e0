#include "springerkit/exceptional.hpp"

#include <algorithm>

#include "springerkit/errors.hpp"

namespace springerkit {

namespace {

const std::vector<std::string> kG2{"0", "A1", "~A1", "G2(a1)", "G2"};

const std::vector<std::string> kF4{"0",      "A1",      "~A1",     "A1+~A1",  "A2",     "~A2",
                                   "A2+~A1", "B2",      "~A2+A1",  "C3(a1)",  "F4(a3)", "B3",
                                   "C3",     "F4(a2)",  "F4(a1)",  "F4"};

const std::vector<std::string> kE6{"0",       "A1",     "2A1",   "3A1",    "A2",     "A2+A1",  "2A2",
                                   "A2+2A1",  "A3",     "2A2+A1", "A3+A1", "D4(a1)", "A4",     "D4",
                                   "A4+A1",   "A5",     "D5(a1)", "E6(a3)", "D5",    "E6(a1)", "E6"};

const std::vector<std::string> kE7{
    "0",         "A1",        "2A1",       "(3A1)''",    "(3A1)'",     "A2",        "4A1",
    "A2+A1",     "A2+2A1",    "A3",        "2A2",        "A2+3A1",     "(A3+A1)''", "2A2+A1",
    "(A3+A1)'",  "D4(a1)",    "A3+2A1",    "D4",         "D4(a1)+A1",  "A3+A2",     "A4",
    "A3+A2+A1",  "(A5)''",    "D4+A1",     "A4+A1",      "D5(a1)",     "A4+A2",     "(A5)'",
    "A5+A1",     "D5(a1)+A1", "D6(a2)",    "E6(a3)",     "D5",         "E7(a5)",    "A6",
    "D5+A1",     "D6(a1)",    "E7(a4)",    "D6",         "E6(a1)",     "E6",        "E7(a3)",
    "E7(a2)",    "E7(a1)",    "E7"};

const std::vector<std::string> kE8{
    "0",          "A1",        "2A1",       "3A1",        "A2",        "4A1",        "A2+A1",
    "A2+2A1",     "A3",        "A2+3A1",    "2A2",        "2A2+A1",    "A3+A1",      "D4(a1)",
    "D4",         "2A2+2A1",   "A3+2A1",    "D4(a1)+A1",  "A3+A2",     "A4",         "A3+A2+A1",
    "D4+A1",      "D4(a1)+A2", "A4+A1",     "2A3",        "D5(a1)",    "A4+2A1",     "A4+A2",
    "A5",         "D5(a1)+A1", "A4+A2+A1",  "D4+A2",      "E6(a3)",    "D5",         "A4+A3",
    "A5+A1",      "D5(a1)+A2", "D6(a2)",    "E6(a3)+A1",  "E7(a5)",    "D5+A1",      "E8(a7)",
    "A6",         "D6(a1)",    "A6+A1",     "E7(a4)",     "E6(a1)",    "D5+A2",      "D6",
    "E6",         "D7(a2)",    "A7",        "E6(a1)+A1",  "E7(a3)",    "E8(b6)",     "D7(a1)",
    "E6+A1",      "E7(a2)",    "E8(a6)",    "D7",         "E8(b5)",    "E7(a1)",     "E8(a5)",
    "E8(b4)",     "E7",        "E8(a4)",    "E8(a3)",     "E8(a2)",    "E8(a1)",     "E8"};

// Exclusion lists, with primes and summand order as usually printed.
const std::vector<std::string> kRigidG2{"A1"};
const std::vector<std::string> kRigidF4{"A1", "~A1", "A1+~A1", "A2+~A1", "~A2+A1"};
const std::vector<std::string> kRigidE6{"A1", "3A1", "2A2+A1"};
const std::vector<std::string> kRigidE7{"A1", "2A1", "(3A1)'", "4A1", "A2+2A1", "A1+2A2", "(A1+A3)'"};
const std::vector<std::string> kRigidE8{"A1",     "2A1",     "3A1",       "4A1",      "A2+A1",     "A2+2A1",
                                        "A2+3A1", "2A2+A1",  "A3+A1",     "2A2+2A1",  "A3+2A1",    "D4(a1)+A1",
                                        "A3+A2+A1", "2A3",   "D5(a1)+A2", "A5+A1",    "A4+A3"};
const std::vector<std::string> kInducedE7{"A2+A1", "A3+2A1", "A5+A1"};
const std::vector<std::string> kInducedE8{"A3",        "D4+A1",     "A4+A1",  "D5(a1)", "D5(a1)+A1",
                                          "E6(a3)+A1", "E7(a5)",    "D5+A1",  "E6+A1"};
const std::vector<std::string> kNone{};

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

// Sort the '+'-separated summands at bracket depth 0, recursing into groups.
std::string sort_summands(std::string_view s) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') {
      // A group opened at the start of a summand holds summands of its own;
      // a group after a name (as in D4(a1)) is kept verbatim.
      if (depth == 0 && current.empty()) {
        std::size_t close = i;
        int d = 0;
        for (; close < s.size(); ++close) {
          if (s[close] == '(') ++d;
          if (s[close] == ')' && --d == 0) break;
        }
        if (close == s.size()) throw LabelError("unbalanced brackets in label '" + std::string(s) + "'");
        current += '(' + sort_summands(s.substr(i + 1, close - i - 1)) + ')';
        i = close;
        continue;
      }
      ++depth;
    } else if (ch == ')') {
      --depth;
    } else if (ch == '+' && depth == 0) {
      parts.push_back(std::move(current));
      current.clear();
      continue;
    }
    current += ch;
  }
  parts.push_back(std::move(current));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '+';
    out += parts[i];
  }
  return out;
}

}  // namespace

ExceptionalType parse_exceptional_type(std::string_view text) {
  if (text == "G2") return ExceptionalType::G2;
  if (text == "F4") return ExceptionalType::F4;
  if (text == "E6") return ExceptionalType::E6;
  if (text == "E7") return ExceptionalType::E7;
  if (text == "E8") return ExceptionalType::E8;
  throw LabelError("unknown exceptional type '" + std::string(text) + "'");
}

std::string to_string(ExceptionalType type) {
  switch (type) {
    case ExceptionalType::G2: return "G2";
    case ExceptionalType::F4: return "F4";
    case ExceptionalType::E6: return "E6";
    case ExceptionalType::E7: return "E7";
    case ExceptionalType::E8: return "E8";
  }
  return "";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::GuaranteedSmooth: return "guaranteed-smooth";
    case Verdict::Unknown: return "unknown";
    case Verdict::NoSmooth: return "no-smooth";
  }
  return "";
}

std::string normalize_label(std::string_view label) {
  std::string s;
  for (char ch : label) {
    if (ch != ' ' && ch != '\t' && ch != '_' && ch != '{' && ch != '}') s += ch;
  }
  s = replace_all(s, "\xE2\x80\xB3", "''");  // double prime
  s = replace_all(s, "\xE2\x80\xB2", "'");   // prime
  s = replace_all(s, "\xE2\x80\x99", "'");   // right single quotation mark
  s = replace_all(s, "\"", "''");
  s = replace_all(s, "\xC3\x83", "~A");       // A with tilde
  s = replace_all(s, "A\xCC\x83", "~A");      // A followed by combining tilde
  s = replace_all(s, "\xCB\x9C", "~");        // small tilde
  if (s.empty()) throw LabelError("empty orbit label");
  return sort_summands(s);
}

const std::vector<std::string>& orbit_labels(ExceptionalType type) {
  switch (type) {
    case ExceptionalType::G2: return kG2;
    case ExceptionalType::F4: return kF4;
    case ExceptionalType::E6: return kE6;
    case ExceptionalType::E7: return kE7;
    case ExceptionalType::E8: return kE8;
  }
  return kNone;
}

const std::vector<std::string>& rigid_exclusions(ExceptionalType type) {
  switch (type) {
    case ExceptionalType::G2: return kRigidG2;
    case ExceptionalType::F4: return kRigidF4;
    case ExceptionalType::E6: return kRigidE6;
    case ExceptionalType::E7: return kRigidE7;
    case ExceptionalType::E8: return kRigidE8;
  }
  return kNone;
}

const std::vector<std::string>& induced_exclusions(ExceptionalType type) {
  if (type == ExceptionalType::E7) return kInducedE7;
  if (type == ExceptionalType::E8) return kInducedE8;
  return kNone;
}

OrbitVerdict smooth_ov_verdict(ExceptionalType type, std::string_view label) {
  const std::string key = normalize_label(label);
  const auto& labels = orbit_labels(type);
  const auto it = std::find_if(labels.begin(), labels.end(),
                               [&](const std::string& l) { return normalize_label(l) == key; });
  if (it == labels.end()) {
    throw LabelError("'" + std::string(label) + "' is not a nilpotent orbit label of " + to_string(type));
  }
  auto listed = [&](const std::vector<std::string>& list) {
    return std::any_of(list.begin(), list.end(), [&](const std::string& l) { return normalize_label(l) == key; });
  };
  const std::string prefix = to_string(type) + ":";
  if (type == ExceptionalType::G2 && listed(kRigidG2)) {
    return {Verdict::NoSmooth, *it, prefix + "minimal-orbit-singular"};
  }
  if (listed(rigid_exclusions(type))) return {Verdict::Unknown, *it, prefix + "rigid-exclusion"};
  if (listed(induced_exclusions(type))) return {Verdict::Unknown, *it, prefix + "induction-exclusion"};
  return {Verdict::GuaranteedSmooth, *it, prefix + "not-excluded"};
}

}  // namespace springerkit
