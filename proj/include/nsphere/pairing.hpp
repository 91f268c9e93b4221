#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsphere {

/// Which pairings index the Gram/Weingarten matrices.
///
///  - classical: every pairing of {1..k} (the sphere S^{n-1}).
///  - half: pairings in which every string crosses an even number of other
///    strings, equivalently every string joins an odd and an even position
///    (the half-liberated sphere).
///  - free: noncrossing pairings (the free sphere).
///  - even_crossings: pairings whose total crossing count is even. Not the
///    half-liberated category; kept so the audit can show where that reading
///    breaks the sphere relations.
enum class PairingCategory { classical, half, free, even_crossings };

inline constexpr std::array<PairingCategory, 3> kSphereCategories = {
    PairingCategory::classical, PairingCategory::half, PairingCategory::free};

std::string_view name(PairingCategory category);
std::optional<PairingCategory> parse_category(std::string_view text);

/// Perfect matching of {1..k}, stored as a 1-based partner array:
/// partner(a) == b iff {a, b} is a string.
class Pairing {
 public:
  Pairing() = default;
  /// Validates the involution; throws InvalidInput.
  explicit Pairing(std::vector<int> partner);

  std::size_t size() const { return partner_.size(); }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point - 1)]; }
  std::span<const int> partners() const { return partner_; }

  /// Strings as (a, b) with a < b, sorted by a.
  std::vector<std::pair<int, int>> strings() const;

  /// "[2,1,4,3]".
  std::string to_string() const;

  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  std::vector<int> partner_;
};

/// All pairings of {1..k} in the category, lexicographic on partner arrays.
/// Odd k gives an empty list; k = 0 gives the single empty pairing.
std::vector<Pairing> enumerate_pairings(std::size_t k, PairingCategory category);

/// Number of string pairs {a,b}, {c,d} with a < c < b < d.
std::size_t crossing_number(const Pairing& p);

bool belongs_to(const Pairing& p, PairingCategory category);

/// Cycles of the multigraph p + q on {1..k}. Both must have the same size.
std::size_t join_loops(const Pairing& p, const Pairing& q);

/// 1 iff every string {a,b} of p joins equal letters of the index sequence.
bool delta_kernel(const Pairing& p, std::span<const int> indices);

/// Crossing-number histogram over all pairings of {1..k}; index = crossings.
std::vector<std::size_t> crossing_histogram(std::size_t k);

}  // namespace nsphere
