#pragma once

// Ordinals below epsilon_0 in hereditary Cantor normal form.
//
// An Ordinal is a strictly descending list of terms w^e * c with c >= 1.
// Zero is the empty list. The representation is canonical, so structural
// equality is value equality.

#include <compare>
#include <concepts>
#include <stdexcept>
#include <type_traits>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace otm {

struct Term;

class Ordinal {
 public:
  Ordinal() = default;
  // Natural numbers embed as a single exponent-0 term.
  template <std::integral T>
  Ordinal(T n)  // NOLINT(google-explicit-constructor)
      : Ordinal(checked_natural(n)) {}

  // Validates canonical form; throws std::invalid_argument otherwise.
  static Ordinal from_terms(std::vector<Term> terms);
  static Ordinal omega();
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const;
  bool is_finite() const;
  bool is_limit() const;      // nonzero with no finite part
  bool is_successor() const;  // nonzero finite part
  std::uint64_t finite_part() const;
  // Value as a natural number; throws std::domain_error if infinite.
  std::uint64_t to_natural() const;
  Ordinal leading_exponent() const;  // 0 for zero and finite values
  std::uint64_t leading_coefficient() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  friend struct OrdinalAccess;
  struct Natural {
    std::uint64_t value;
  };
  template <std::integral T>
  static Natural checked_natural(T n) {
    if constexpr (std::is_signed_v<T>) {
      if (n < 0) throw std::invalid_argument("negative natural number");
    }
    return Natural{static_cast<std::uint64_t>(n)};
  }
  explicit Ordinal(Natural n);
  explicit Ordinal(std::vector<Term> terms, int /*unchecked*/);

  std::vector<Term> terms_;
};

struct Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

inline bool Ordinal::is_zero() const { return terms_.empty(); }

enum class Order { less, equal, greater };

Order compare(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
// 0^0 = 1.
Ordinal pow(const Ordinal& a, const Ordinal& b);

// The unique z with a + z = b; requires a <= b (std::domain_error otherwise).
Ordinal left_subtract(const Ordinal& b, const Ordinal& a);

// b = w * quotient + finite_part.
struct CnfSplit {
  Ordinal quotient;
  std::uint64_t finite_part = 0;

  friend bool operator==(const CnfSplit&, const CnfSplit&) = default;
};

CnfSplit cnf_split(const Ordinal& b);
// Inverse of cnf_split: w * quotient + finite_part.
Ordinal cnf_join(const CnfSplit& split);

// Goedel pairing: pairs ordered by max, then lexicographically.
Ordinal pair(const Ordinal& first, const Ordinal& second);
std::pair<Ordinal, Ordinal> unpair(const Ordinal& code);

// Order type of {(x, y) : max(x, y) < m} under the pairing order.
Ordinal pairing_square(const Ordinal& m);

// Largest ordinal satisfying a predicate that is downward closed, continuous
// at limits and bounded. Built greedily term by term.
Ordinal largest_satisfying(const std::function<bool(const Ordinal&)>& pred);

// True iff exponents strictly descend and coefficients are positive, at
// every nesting level.
bool is_canonical(const std::vector<Term>& terms);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

// Canonical text form, e.g. "w^2*3+w*5+7", "w^(w)", "0".
std::string to_string(const Ordinal& a);
std::ostream& operator<<(std::ostream& os, const Ordinal& a);

// Nesting height of the exponent tower (0 for finite values).
int height(const Ordinal& a);

}  // namespace otm
