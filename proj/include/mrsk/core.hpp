#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrsk {

// An integer interval [a,b].  Genuine when a <= b; the degenerate pair
// (a+1, a) is kept as a formal "dummy" marker d(a).  No other (begin, end)
// combination is constructible.
class Segment {
 public:
  static Segment genuine(int a, int b);
  static Segment dummy(int a);
  // Accepts any pair with e >= b - 1.
  static Segment from_endpoints(int b, int e);

  int begin() const { return b_; }
  int end() const { return e_; }
  bool is_dummy() const { return e_ == b_ - 1; }
  int length() const { return e_ - b_ + 1; }

  // [a-1, b-1]; defined for dummies as well.
  Segment shift_left() const;
  // [a+1, b]; empty (nullopt) when a == b.  Genuine input only.
  std::optional<Segment> behead() const;
  // [a,b] -> [-b,-a]; d(a) -> d(-a-1).
  Segment contragredient() const;

  std::string str() const;

  friend bool operator==(Segment x, Segment y) = default;

 private:
  Segment(int b, int e) : b_(b), e_(e) {}
  int b_;
  int e_;
};

// Strict order: both endpoints strictly increase.
inline bool precedes(Segment x, Segment y) {
  return x.begin() < y.begin() && x.end() < y.end();
}

// inner is contained in outer (coordinate-wise; valid for dummies).
inline bool contained(Segment inner, Segment outer) {
  return outer.begin() <= inner.begin() && inner.end() <= outer.end();
}

// Canonical order used everywhere for storage and display:
// begin descending, then end descending.
inline bool canonical_less(Segment x, Segment y) {
  if (x.begin() != y.begin()) return x.begin() > y.begin();
  return x.end() > y.end();
}

// A finite multiset of segments, kept sorted in canonical order.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> entries);

  static Multisegment single(Segment s) { return Multisegment({s}); }

  const std::vector<Segment>& entries() const& { return entries_; }
  std::vector<Segment> entries() && { return std::move(entries_); }
  bool empty() const { return entries_.empty(); }
  std::size_t count() const { return entries_.size(); }
  // Sum of segment lengths; dummies contribute 0.
  long long total_length() const;

  bool has_dummies() const;
  bool purely_genuine() const { return !has_dummies(); }
  Multisegment genuine_part() const;
  Multisegment dummy_part() const;
  // Multiplicity of d(a).
  int dummy_multiplicity(int a) const;
  // Distinct a with d(a) present, ascending.
  std::vector<int> dummy_support() const;

  // min/max over the genuine part; throws when it is empty.
  int min_begin() const;
  int max_end() const;

  void add(Segment s);
  // Removes one copy; throws std::invalid_argument when absent.
  void remove_one(Segment s);
  bool contains(Segment s) const;

  Multisegment& operator+=(const Multisegment& other);
  friend Multisegment operator+(Multisegment a, const Multisegment& b) {
    a += b;
    return a;
  }
  // Multiset difference; throws when other is not a sub-multiset.
  Multisegment& operator-=(const Multisegment& other);
  friend Multisegment operator-(Multisegment a, const Multisegment& b) {
    a -= b;
    return a;
  }

  Multisegment contragredient() const;

  friend bool operator==(const Multisegment& x, const Multisegment& y) = default;
  // Lexicographic on the canonical entry list; a total order for map keys.
  friend bool operator<(const Multisegment& x, const Multisegment& y);

  std::string str() const;
  std::string json() const;

  // Grammar: "0" or '+'-separated terms "[a,b]" / "d(a)".
  static Multisegment parse(const std::string& text);
  static Multisegment from_json(const std::string& text);

 private:
  std::vector<Segment> entries_;
};

// A nonempty strictly decreasing chain: segments()[i+1] << segments()[i].
// Canonical storage order coincides with the chain order.
class Ladder {
 public:
  explicit Ladder(std::vector<Segment> chain);
  static Ladder single(Segment s) { return Ladder({s}); }
  // Throws unless the multisegment is a ladder.
  static Ladder from_multisegment(const Multisegment& m);

  const std::vector<Segment>& segments() const& { return chain_; }
  std::vector<Segment> segments() && { return std::move(chain_); }
  std::size_t size() const { return chain_.size(); }
  Multisegment as_multisegment() const { return Multisegment(chain_); }
  bool has_dummies() const;
  // Genuine sub-chain; empty optional when all entries are dummies.
  std::optional<Ladder> genuine_part() const;
  Ladder contragredient() const;

  std::string str() const;

  friend bool operator==(const Ladder& x, const Ladder& y) = default;

 private:
  std::vector<Segment> chain_;
};

bool is_ladder(std::span<const Segment> chain);

}  // namespace mrsk
