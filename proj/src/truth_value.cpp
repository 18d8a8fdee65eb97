#include "mvlab/truth_value.hpp"

#include <algorithm>
#include <cctype>

namespace mvlab {

std::optional<TruthValue> TruthValue::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'T': return kTrue;
      case 'B': return kBoth;
      case 'N': return kNeither;
      case 'F': return kFalse;
      default: return std::nullopt;
    }
  }
  if (s == "{1}") return kTrue;
  if (s == "{1,0}" || s == "{0,1}") return kBoth;
  if (s == "{}") return kNeither;
  if (s == "{0}") return kFalse;
  return std::nullopt;
}

std::string TruthValue::subset_notation() const {
  if (has_true_ && has_false_) return "{1,0}";
  if (has_true_) return "{1}";
  if (has_false_) return "{0}";
  return "{}";
}

}  // namespace mvlab
