#include "nsphere/pairing.hpp"

#include <algorithm>

#include "nsphere/errors.hpp"

namespace nsphere {

std::string_view name(PairingCategory category) {
  switch (category) {
    case PairingCategory::classical:
      return "classical";
    case PairingCategory::half:
      return "half";
    case PairingCategory::free:
      return "free";
    case PairingCategory::even_crossings:
      return "even-crossings";
  }
  return "?";
}

std::optional<PairingCategory> parse_category(std::string_view text) {
  for (auto c : {PairingCategory::classical, PairingCategory::half, PairingCategory::free,
                 PairingCategory::even_crossings}) {
    if (text == name(c)) return c;
  }
  return std::nullopt;
}

Pairing::Pairing(std::vector<int> partner) : partner_(std::move(partner)) {
  const int k = static_cast<int>(partner_.size());
  for (int a = 1; a <= k; ++a) {
    const int b = partner_[static_cast<std::size_t>(a - 1)];
    if (b < 1 || b > k || b == a || partner_[static_cast<std::size_t>(b - 1)] != a) {
      throw InvalidInput("partner array is not a fixed-point-free involution");
    }
  }
}

std::vector<std::pair<int, int>> Pairing::strings() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(size() / 2);
  for (int a = 1; a <= static_cast<int>(size()); ++a) {
    if (partner(a) > a) out.emplace_back(a, partner(a));
  }
  return out;
}

std::string Pairing::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < partner_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(partner_[i]);
  }
  return out + "]";
}

namespace {

// Match the smallest unmatched point with each later unmatched point in
// increasing order. Partner arrays come out in lexicographic order because
// position a's partner is the first entry to differ between branches.
void match_smallest(std::vector<int>& partner, std::vector<Pairing>& out) {
  const auto first = std::find(partner.begin(), partner.end(), 0);
  if (first == partner.end()) {
    out.emplace_back(partner);
    return;
  }
  const int a = static_cast<int>(first - partner.begin()) + 1;
  for (int b = a + 1; b <= static_cast<int>(partner.size()); ++b) {
    if (partner[static_cast<std::size_t>(b - 1)] != 0) continue;
    partner[static_cast<std::size_t>(a - 1)] = b;
    partner[static_cast<std::size_t>(b - 1)] = a;
    match_smallest(partner, out);
    partner[static_cast<std::size_t>(a - 1)] = 0;
    partner[static_cast<std::size_t>(b - 1)] = 0;
  }
}

bool every_string_crosses_evenly(const Pairing& p) {
  // A string {a,b} crosses an even number of strings iff b - a is odd.
  for (const auto& [a, b] : p.strings()) {
    if ((b - a) % 2 == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Pairing> enumerate_pairings(std::size_t k, PairingCategory category) {
  std::vector<Pairing> all;
  if (k % 2 != 0) return all;
  std::vector<int> partner(k, 0);
  match_smallest(partner, all);
  std::erase_if(all, [category](const Pairing& p) { return !belongs_to(p, category); });
  return all;
}

std::size_t crossing_number(const Pairing& p) {
  const auto s = p.strings();
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto [a, b] = s[i];
      const auto [c, d] = s[j];
      if (a < c && c < b && b < d) ++count;
    }
  }
  return count;
}

bool belongs_to(const Pairing& p, PairingCategory category) {
  switch (category) {
    case PairingCategory::classical:
      return true;
    case PairingCategory::half:
      return every_string_crosses_evenly(p);
    case PairingCategory::free:
      return crossing_number(p) == 0;
    case PairingCategory::even_crossings:
      return crossing_number(p) % 2 == 0;
  }
  return false;
}

std::size_t join_loops(const Pairing& p, const Pairing& q) {
  if (p.size() != q.size()) throw InvalidInput("join_loops: pairings of different sizes");
  const int k = static_cast<int>(p.size());
  std::vector<char> seen(p.size(), 0);
  std::size_t loops = 0;
  for (int start = 1; start <= k; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    ++loops;
    // Alternate p-edges and q-edges until the cycle closes.
    int v = start;
    do {
      seen[static_cast<std::size_t>(v - 1)] = 1;
      const int w = p.partner(v);
      seen[static_cast<std::size_t>(w - 1)] = 1;
      v = q.partner(w);
    } while (v != start);
  }
  return loops;
}

bool delta_kernel(const Pairing& p, std::span<const int> indices) {
  if (indices.size() != p.size()) throw InvalidInput("delta_kernel: word length differs from k");
  for (const auto& [a, b] : p.strings()) {
    if (indices[static_cast<std::size_t>(a - 1)] != indices[static_cast<std::size_t>(b - 1)])
      return false;
  }
  return true;
}

std::vector<std::size_t> crossing_histogram(std::size_t k) {
  std::vector<std::size_t> hist;
  for (const auto& p : enumerate_pairings(k, PairingCategory::classical)) {
    const std::size_t c = crossing_number(p);
    if (hist.size() <= c) hist.resize(c + 1, 0);
    ++hist[c];
  }
  return hist;
}

}  // namespace nsphere
