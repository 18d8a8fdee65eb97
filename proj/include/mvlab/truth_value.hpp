#pragma once

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace mvlab {

/// A truth value in subset semantics: a subset of the classical values {1, 0}.
///
/// The four subsets are named T = {1}, B = {1,0}, N = {} and F = {0}. The
/// canonical order T, B, N, F is used for every table and every enumeration.
class TruthValue {
 public:
  constexpr TruthValue() = default;
  constexpr TruthValue(bool has_true, bool has_false)
      : has_true_(has_true), has_false_(has_false) {}

  /// 1 in v
  constexpr bool has_true() const { return has_true_; }
  /// 0 in v
  constexpr bool has_false() const { return has_false_; }

  /// Position in the canonical order T, B, N, F.
  constexpr int code() const {
    if (has_true_) return has_false_ ? 1 : 0;
    return has_false_ ? 3 : 2;
  }

  static constexpr TruthValue from_code(int code) {
    constexpr std::array<TruthValue, 4> all{TruthValue{true, false}, TruthValue{true, true},
                                            TruthValue{false, false}, TruthValue{false, true}};
    return all.at(static_cast<std::size_t>(code));
  }

  constexpr char name() const { return "TBNF"[code()]; }

  /// Accepts `T`, `B`, `N`, `F` (either case) and the subset spellings
  /// `{1}`, `{1,0}`, `{0,1}`, `{}`, `{0}`.
  static std::optional<TruthValue> parse(std::string_view text);

  /// Subset notation, e.g. "{1,0}".
  std::string subset_notation() const;

  friend constexpr bool operator==(TruthValue, TruthValue) = default;
  friend constexpr std::strong_ordering operator<=>(TruthValue a, TruthValue b) {
    return a.code() <=> b.code();
  }

 private:
  bool has_true_ = false;
  bool has_false_ = false;
};

inline constexpr TruthValue kTrue{true, false};
inline constexpr TruthValue kBoth{true, true};
inline constexpr TruthValue kNeither{false, false};
inline constexpr TruthValue kFalse{false, true};

inline std::ostream& operator<<(std::ostream& os, TruthValue v) { return os << v.name(); }

}  // namespace mvlab
