#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/errors.hpp"

namespace degseq {

inline constexpr int kMaxSequenceLength = 1'000'000;

namespace detail {

// Erdos-Gallai on a non-increasing vector. Rejects out-of-range entries and
// odd sums, then checks sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k) for
// every k, locating the min() split point by binary search.
inline bool erdos_gallai_sorted(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return true;
  if (d.front() > n - 1 || d.back() < 0) return false;
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];
  if (prefix[n] % 2 != 0) return false;
  for (int k = 1; k <= n; ++k) {
    auto split = std::partition_point(d.begin() + k, d.end(),
                                      [k](int v) { return v >= k; });
    const auto idx = static_cast<std::int64_t>(split - d.begin());
    const std::int64_t tail =
        static_cast<std::int64_t>(k) * (idx - k) + (prefix[n] - prefix[idx]);
    if (prefix[k] > static_cast<std::int64_t>(k) * (k - 1) + tail) return false;
  }
  return true;
}

inline void check_length(std::size_t n) {
  if (n == 0) throw InvalidSequenceError("sequence must have at least one entry");
  if (n > static_cast<std::size_t>(kMaxSequenceLength))
    throw TooLargeError("sequence length exceeds cap of 1000000");
}

}  // namespace detail

// Graphicality of an arbitrary integer vector; sorts a working copy.
inline bool is_graphic(const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  return detail::erdos_gallai_sorted(sorted);
}

std::vector<int> parse_sequence(std::string_view text);
std::string format_sequence(std::span<const int> values);

// Positions of a labeled sequence rearranged into non-increasing order.
// Sorting is stable in the label order, so equal values keep ascending labels.
struct SortedSequenceView {
  std::vector<int> values;       // non-increasing
  std::vector<int> label_at;     // label_at[p-1] = original label at position p
  std::vector<int> position_of;  // position_of[l-1] = sorted position of label l
};

// Integer sequence indexed by vertex labels 1..n; order is meaningful and
// entries may be negative (products of decrement), which graphicality rejects.
class LabeledIntSequence {
 public:
  explicit LabeledIntSequence(std::vector<int> values) : values_(std::move(values)) {
    detail::check_length(values_.size());
  }

  int size() const { return static_cast<int>(values_.size()); }

  int value(int label) const {
    check_label(label);
    return values_[static_cast<std::size_t>(label) - 1];
  }

  const std::vector<int>& values() const { return values_; }

  std::int64_t sum() const {
    return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
  }

  SortedSequenceView sorted() const {
    const int n = size();
    SortedSequenceView view;
    view.label_at.resize(static_cast<std::size_t>(n));
    std::iota(view.label_at.begin(), view.label_at.end(), 1);
    std::stable_sort(view.label_at.begin(), view.label_at.end(),
                     [&](int a, int b) { return values_[a - 1] > values_[b - 1]; });
    view.values.resize(static_cast<std::size_t>(n));
    view.position_of.resize(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
      const int label = view.label_at[p - 1];
      view.values[p - 1] = values_[label - 1];
      view.position_of[label - 1] = p;
    }
    return view;
  }

  void check_label(int label) const {
    if (label < 1 || label > size())
      throw IndexOutOfRangeError("label " + std::to_string(label) +
                                 " outside 1.." + std::to_string(size()));
  }

  std::string str() const { return format_sequence(values_); }

  friend bool operator==(const LabeledIntSequence&, const LabeledIntSequence&) = default;

 private:
  std::vector<int> values_;
};

// Non-increasing degree sequence with entries in [0, n-1]. Construction
// enforces shape only; graphicality is a separate question.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
    detail::check_length(values_.size());
    const int n = static_cast<int>(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < 0 || values_[i] > n - 1)
        throw InvalidSequenceError("entry " + std::to_string(values_[i]) +
                                   " at position " + std::to_string(i + 1) +
                                   " outside 0.." + std::to_string(n - 1));
      if (i > 0 && values_[i] > values_[i - 1])
        throw InvalidSequenceError("sequence must be non-increasing (position " +
                                   std::to_string(i + 1) + ")");
    }
  }

  static DegreeSequence parse(std::string_view text) {
    return DegreeSequence(parse_sequence(text));
  }

  int size() const { return static_cast<int>(values_.size()); }

  int degree(int label) const {
    check_label(label);
    return values_[static_cast<std::size_t>(label) - 1];
  }

  const std::vector<int>& values() const { return values_; }

  std::int64_t degree_sum() const {
    return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
  }

  LabeledIntSequence to_labeled() const { return LabeledIntSequence(values_); }

  void check_label(int label) const {
    if (label < 1 || label > size())
      throw IndexOutOfRangeError("label " + std::to_string(label) +
                                 " outside 1.." + std::to_string(size()));
  }

  std::string str() const { return format_sequence(values_); }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

inline bool is_graphic(const DegreeSequence& a) {
  return detail::erdos_gallai_sorted(a.values());
}

inline bool is_graphic(const LabeledIntSequence& a) { return is_graphic(a.values()); }

// Complement sequence: position i gets n - 1 - a_{n+1-i}, which is again
// non-increasing. Realized by complementing any realization and reversing
// the label order (label i <-> n+1-i).
inline DegreeSequence complement(const DegreeSequence& a) {
  const int n = a.size();
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) values[i - 1] = n - 1 - a.degree(n + 1 - i);
  return DegreeSequence(std::move(values));
}

enum class Majorization {
  LeftMajorizes,
  RightMajorizes,
  Equal,
  Incomparable,
  UnequalSums,
};

inline std::string_view to_string(Majorization m) {
  switch (m) {
    case Majorization::LeftMajorizes: return "LeftMajorizes";
    case Majorization::RightMajorizes: return "RightMajorizes";
    case Majorization::Equal: return "Equal";
    case Majorization::Incomparable: return "Incomparable";
    case Majorization::UnequalSums: return "UnequalSums";
  }
  return "Unknown";
}

// Dominance-order comparison of two equal-length non-increasing vectors.
inline Majorization compare_majorization(const std::vector<int>& a,
                                         const std::vector<int>& b) {
  if (a.size() != b.size())
    throw LengthMismatchError("majorization needs equal lengths, got " +
                              std::to_string(a.size()) + " and " +
                              std::to_string(b.size()));
  std::int64_t pa = 0;
  std::int64_t pb = 0;
  bool a_ahead = false;
  bool b_ahead = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb) a_ahead = true;
    if (pb > pa) b_ahead = true;
  }
  if (pa != pb) return Majorization::UnequalSums;
  if (a_ahead && b_ahead) return Majorization::Incomparable;
  if (a_ahead) return Majorization::LeftMajorizes;
  if (b_ahead) return Majorization::RightMajorizes;
  return Majorization::Equal;
}

inline Majorization majorizes(const DegreeSequence& a, const DegreeSequence& b) {
  return compare_majorization(a.values(), b.values());
}

namespace detail {

inline void check_distinct_labels(const LabeledIntSequence& a,
                                  std::span<const int> labels) {
  std::vector<int> seen(labels.begin(), labels.end());
  for (int label : seen) a.check_label(label);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw IndexOutOfRangeError("labels must be pairwise distinct");
}

inline LabeledIntSequence adjust(const LabeledIntSequence& a,
                                 std::span<const int> labels, int delta) {
  check_distinct_labels(a, labels);
  std::vector<int> values = a.values();
  for (int label : labels) values[static_cast<std::size_t>(label) - 1] += delta;
  return LabeledIntSequence(std::move(values));
}

}  // namespace detail

// Entry-wise +1 at the given pairwise-distinct labels.
inline LabeledIntSequence increment(const LabeledIntSequence& a,
                                    std::span<const int> labels) {
  return detail::adjust(a, labels, +1);
}

inline LabeledIntSequence increment(const DegreeSequence& a,
                                    std::span<const int> labels) {
  return increment(a.to_labeled(), labels);
}

// Entry-wise -1 at the given pairwise-distinct labels; entries may go negative.
inline LabeledIntSequence decrement(const LabeledIntSequence& a,
                                    std::span<const int> labels) {
  return detail::adjust(a, labels, -1);
}

inline LabeledIntSequence decrement(const DegreeSequence& a,
                                    std::span<const int> labels) {
  return decrement(a.to_labeled(), labels);
}

// One Kleitman-Wang step: zero out position `label` and subtract 1 from the
// a_label largest other entries (which are the leading ones, label skipped).
inline LabeledIntSequence kleitman_wang_reduce(const DegreeSequence& a, int label) {
  a.check_label(label);
  const int n = a.size();
  int remaining = a.degree(label);
  std::vector<int> values = a.values();
  values[static_cast<std::size_t>(label) - 1] = 0;
  for (int i = 1; i <= n && remaining > 0; ++i) {
    if (i == label) continue;
    values[static_cast<std::size_t>(i) - 1] -= 1;
    --remaining;
  }
  if (remaining > 0)
    throw InsufficientEntriesError("degree " + std::to_string(a.degree(label)) +
                                   " exceeds available entries");
  return LabeledIntSequence(std::move(values));
}

// Comma- or whitespace-separated integers. Whitespace is free-form, but a
// comma must sit between exactly two entries, so ",2", "2,,1" and "2," fail.
inline std::vector<int> parse_sequence(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  bool comma_pending = false;
  std::size_t comma_at = 0;
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    if (text[i] == ',') {
      if (values.empty() || comma_pending)
        throw ParseError("empty entry at position " + std::to_string(i), i);
      comma_pending = true;
      comma_at = i;
      ++i;
      continue;
    }
    const std::size_t start = i;
    bool negative = false;
    if (text[i] == '-' || text[i] == '+') {
      negative = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      throw ParseError("expected integer at position " + std::to_string(start), start);
    std::int64_t v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > std::int64_t{1} << 40)
        throw ParseError("integer too large at position " + std::to_string(start), start);
      ++i;
    }
    if (i < text.size() && !is_space(text[i]) && text[i] != ',')
      throw ParseError("unexpected character '" + std::string(1, text[i]) +
                           "' at position " + std::to_string(i),
                       i);
    values.push_back(static_cast<int>(negative ? -v : v));
    comma_pending = false;
  }
  if (comma_pending)
    throw ParseError("trailing comma at position " + std::to_string(comma_at), comma_at);
  if (values.empty()) throw ParseError("empty sequence", 0);
  return values;
}

inline std::string format_sequence(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace degseq
