#include "mrsk/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace mrsk {

namespace {

// Coordinates stay far away from int limits so that shifts and negations
// cannot overflow.
constexpr int kCoordLimit = std::numeric_limits<int>::max() / 4;

void check_coord(long long v) {
  if (v > kCoordLimit || v < -kCoordLimit)
    throw std::invalid_argument("segment endpoint out of range");
}

}  // namespace

Segment Segment::genuine(int a, int b) {
  check_coord(a);
  check_coord(b);
  if (a > b) throw std::invalid_argument("genuine segment needs a <= b");
  return Segment(a, b);
}

Segment Segment::dummy(int a) {
  check_coord(a);
  check_coord(a + 1);
  return Segment(a + 1, a);
}

Segment Segment::from_endpoints(int b, int e) {
  check_coord(b);
  check_coord(e);
  if (e < b - 1) throw std::invalid_argument("segment needs end >= begin - 1");
  return Segment(b, e);
}

Segment Segment::shift_left() const { return from_endpoints(b_ - 1, e_ - 1); }

std::optional<Segment> Segment::behead() const {
  if (is_dummy()) throw std::invalid_argument("behead on dummy segment");
  if (b_ == e_) return std::nullopt;
  return from_endpoints(b_ + 1, e_);
}

Segment Segment::contragredient() const { return from_endpoints(-e_, -b_); }

std::string Segment::str() const {
  std::ostringstream os;
  if (is_dummy())
    os << "d(" << e_ << ")";
  else
    os << "[" << b_ << "," << e_ << "]";
  return os.str();
}

Multisegment::Multisegment(std::vector<Segment> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), canonical_less);
}

long long Multisegment::total_length() const {
  long long n = 0;
  for (const auto& s : entries_) n += s.length();
  return n;
}

bool Multisegment::has_dummies() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](Segment s) { return s.is_dummy(); });
}

Multisegment Multisegment::genuine_part() const {
  std::vector<Segment> out;
  for (const auto& s : entries_)
    if (!s.is_dummy()) out.push_back(s);
  return Multisegment(std::move(out));
}

Multisegment Multisegment::dummy_part() const {
  std::vector<Segment> out;
  for (const auto& s : entries_)
    if (s.is_dummy()) out.push_back(s);
  return Multisegment(std::move(out));
}

int Multisegment::dummy_multiplicity(int a) const {
  int n = 0;
  for (const auto& s : entries_)
    if (s.is_dummy() && s.end() == a) ++n;
  return n;
}

std::vector<int> Multisegment::dummy_support() const {
  std::vector<int> pts;
  for (const auto& s : entries_)
    if (s.is_dummy()) pts.push_back(s.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

int Multisegment::min_begin() const {
  bool seen = false;
  int best = 0;
  for (const auto& s : entries_) {
    if (s.is_dummy()) continue;
    if (!seen || s.begin() < best) best = s.begin();
    seen = true;
  }
  if (!seen) throw std::invalid_argument("min_begin of zero multisegment");
  return best;
}

int Multisegment::max_end() const {
  bool seen = false;
  int best = 0;
  for (const auto& s : entries_) {
    if (s.is_dummy()) continue;
    if (!seen || s.end() > best) best = s.end();
    seen = true;
  }
  if (!seen) throw std::invalid_argument("max_end of zero multisegment");
  return best;
}

void Multisegment::add(Segment s) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s, canonical_less);
  entries_.insert(it, s);
}

void Multisegment::remove_one(Segment s) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s, canonical_less);
  if (it == entries_.end() || !(*it == s))
    throw std::invalid_argument("remove_one: segment " + s.str() + " not present");
  entries_.erase(it);
}

bool Multisegment::contains(Segment s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s, canonical_less);
  return it != entries_.end() && *it == s;
}

Multisegment& Multisegment::operator+=(const Multisegment& other) {
  std::vector<Segment> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  std::merge(entries_.begin(), entries_.end(), other.entries_.begin(),
             other.entries_.end(), std::back_inserter(merged), canonical_less);
  entries_ = std::move(merged);
  return *this;
}

Multisegment& Multisegment::operator-=(const Multisegment& other) {
  for (const auto& s : other.entries_) remove_one(s);
  return *this;
}

Multisegment Multisegment::contragredient() const {
  std::vector<Segment> out;
  out.reserve(entries_.size());
  for (const auto& s : entries_) out.push_back(s.contragredient());
  return Multisegment(std::move(out));
}

bool operator<(const Multisegment& x, const Multisegment& y) {
  auto key = [](Segment s) { return std::pair(-s.begin(), -s.end()); };
  return std::lexicographical_compare(
      x.entries_.begin(), x.entries_.end(), y.entries_.begin(), y.entries_.end(),
      [&](Segment a, Segment b) { return key(a) < key(b); });
}

std::string Multisegment::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << "+";
    os << entries_[i].str();
  }
  return os.str();
}

std::string Multisegment::json() const {
  nlohmann::json segs = nlohmann::json::array();
  nlohmann::json dums = nlohmann::json::array();
  for (const auto& s : entries_) {
    if (s.is_dummy())
      dums.push_back(s.end());
    else
      segs.push_back({s.begin(), s.end()});
  }
  nlohmann::json j;
  j["segments"] = segs;
  j["dummies"] = dums;
  return j.dump();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Multisegment run() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size()) fail("trailing input after 0");
      return {};
    }
    std::vector<Segment> entries;
    entries.push_back(term());
    skip_ws();
    while (pos_ < text_.size()) {
      expect('+');
      entries.push_back(term());
      skip_ws();
    }
    return Multisegment(std::move(entries));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "parse error at position " << pos_ << ": " << what;
    throw std::invalid_argument(os.str());
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) fail("expected integer");
    long long v = 0;
    try {
      v = std::stoll(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
    if (v > kCoordLimit || v < -kCoordLimit) fail("integer out of range");
    return static_cast<int>(v);
  }

  Segment term() {
    skip_ws();
    if (peek() == 'd') {
      ++pos_;
      expect('(');
      int a = integer();
      expect(')');
      return Segment::dummy(a);
    }
    if (peek() == '[') {
      ++pos_;
      int a = integer();
      expect(',');
      int b = integer();
      expect(']');
      if (b < a - 1) fail("segment end may not precede begin - 1");
      return Segment::from_endpoints(a, b);
    }
    fail("expected '[a,b]' or 'd(a)'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Multisegment Multisegment::parse(const std::string& text) { return Parser(text).run(); }

Multisegment Multisegment::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Segment> entries;
  for (const auto& p : j.at("segments")) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("segment entries must be [a,b] pairs");
    entries.push_back(Segment::from_endpoints(p[0].get<int>(), p[1].get<int>()));
  }
  if (j.contains("dummies"))
    for (const auto& a : j.at("dummies")) entries.push_back(Segment::dummy(a.get<int>()));
  return Multisegment(std::move(entries));
}

bool is_ladder(std::span<const Segment> chain) {
  if (chain.empty()) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!precedes(chain[i + 1], chain[i])) return false;
  return true;
}

Ladder::Ladder(std::vector<Segment> chain) : chain_(std::move(chain)) {
  if (!is_ladder(chain_)) throw std::invalid_argument("not a ladder chain");
}

Ladder Ladder::from_multisegment(const Multisegment& m) {
  return Ladder(m.entries());
}

bool Ladder::has_dummies() const {
  return std::any_of(chain_.begin(), chain_.end(),
                     [](Segment s) { return s.is_dummy(); });
}

std::optional<Ladder> Ladder::genuine_part() const {
  std::vector<Segment> out;
  for (const auto& s : chain_)
    if (!s.is_dummy()) out.push_back(s);
  if (out.empty()) return std::nullopt;
  return Ladder(std::move(out));
}

Ladder Ladder::contragredient() const {
  std::vector<Segment> out(chain_.rbegin(), chain_.rend());
  for (auto& s : out) s = s.contragredient();
  return Ladder(std::move(out));
}

std::string Ladder::str() const { return as_multisegment().str(); }

}  // namespace mrsk
