#pragma once

#include <map>
#include <string>
#include <vector>

#include "mrsk/bigint.hpp"
#include "mrsk/core.hpp"

namespace mrsk {

// A commutative monomial: multiset of genuine segment variables z[a,b].
struct Monomial {
  std::vector<Segment> factors;  // canonical order

  static Monomial unit() { return {}; }
  long long total_length() const;
  // Multiset of covered integers (with multiplicity).
  std::vector<int> content() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend bool operator<(const Monomial& a, const Monomial& b);
  std::string str() const;
};

// Integer polynomial in the segment variables; zero coefficients are not
// stored.
class RingElement {
 public:
  RingElement() = default;
  static RingElement unit() { return from_monomial(Monomial::unit()); }
  static RingElement variable(Segment s);
  static RingElement from_monomial(Monomial m);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const BigInt& coeff);

  RingElement& operator+=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b) = default;

  std::string str() const;

 private:
  std::map<Monomial, BigInt> terms_;
};

// Signed expansion of a ladder class over pairings of begins with ends.
// A factor with end = begin - 1 is the unit; end < begin - 1 kills the term.
RingElement ladder_class(const Ladder& l);

// Ordered genuine ladder factors of the extraction of (m, dummies), in
// product order (last extracted first).
std::vector<Ladder> rsk_standard_factors(const Multisegment& m, const Multisegment& dummies);

// Product of ladder classes along rsk_standard_factors.
RingElement rsk_standard_class(const Multisegment& m, const Multisegment& dummies);

struct DrsBlockReport {
  std::vector<int> content;          // the grade slice
  std::size_t dimension = 0;         // block size
  BigInt determinant;
  bool unimodular = false;
};

struct DrsReport {
  long long total_size = 0;
  std::vector<DrsBlockReport> blocks;
  bool all_unimodular = true;
};

// Expands every class of the given total size over begin set `as` / end set
// `bs` and checks each content block's transition determinant for +-1.
// `require_saturated` enforces a <= b for all chosen endpoints.
DrsReport drs_basis_check(const std::vector<int>& as, const std::vector<int>& bs,
                          long long total_size, bool require_saturated = true);

// Determinant of a square BigInt matrix (Laplace expansion with subset
// memoization; exact, division-free).
BigInt determinant(const std::vector<std::vector<BigInt>>& mat);

}  // namespace mrsk
