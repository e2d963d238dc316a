#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dsfusion {

/// Bitmask encoding of a subset of a frame: bit i set <=> labels()[i] is a member.
using Subset = std::uint32_t;

inline constexpr std::size_t kDefaultMaxLabels = 20;
inline constexpr std::size_t kHardMaxLabels = 30;

/// Ordered, finite set of mutually exclusive labels.
///
/// Dense mass arrays have 2^n entries, so the label count is capped
/// (kDefaultMaxLabels unless the caller raises it, never above kHardMaxLabels).
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels,
                 std::size_t max_labels = kDefaultMaxLabels);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }

  /// Number of subsets, 2^n.
  std::size_t subset_count() const noexcept { return std::size_t{1} << labels_.size(); }
  Subset full() const noexcept { return static_cast<Subset>(subset_count() - 1); }
  Subset complement(Subset a) const noexcept { return full() & ~a; }

  std::size_t index_of(std::string_view label) const;
  Subset singleton(std::size_t index) const;
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset a) const;

  /// "{a,b}" style rendering; the empty set renders as "{}".
  std::string format(Subset a) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Throws FrameMismatch unless both frames carry the same labels in the same order.
void require_same_frame(const Frame& a, const Frame& b, std::string_view what);

}  // namespace dsfusion
