#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace springerkit {

enum class ExceptionalType { G2, F4, E6, E7, E8 };
enum class Verdict { GuaranteedSmooth, Unknown, NoSmooth };

ExceptionalType parse_exceptional_type(std::string_view text);
std::string to_string(ExceptionalType type);
std::string to_string(Verdict verdict);  // "guaranteed-smooth", "unknown", "no-smooth"

/// Matching key for a Bala-Carter label: whitespace removed, unicode primes
/// and tildes turned into ASCII, '+'-summands sorted (also inside brackets).
std::string normalize_label(std::string_view label);

/// All nilpotent orbit labels of the type, in the usual table order.
const std::vector<std::string>& orbit_labels(ExceptionalType type);
/// Rigid orbits excluded from the smoothness guarantee.
const std::vector<std::string>& rigid_exclusions(ExceptionalType type);
/// Further excluded induced orbits (E7 and E8 only).
const std::vector<std::string>& induced_exclusions(ExceptionalType type);

struct OrbitVerdict {
  Verdict verdict = Verdict::GuaranteedSmooth;
  std::string label;   // label as spelled in the orbit table
  std::string source;  // which rule decided
};

/// Unknown for excluded orbits, NoSmooth for the minimal G2 orbit,
/// GuaranteedSmooth otherwise. Throws LabelError for labels outside the table.
OrbitVerdict smooth_ov_verdict(ExceptionalType type, std::string_view label);

}  // namespace springerkit
