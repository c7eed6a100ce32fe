#include "otm/ordinal.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace otm {

struct OrdinalAccess {
  static Ordinal make(std::vector<Term> terms) {
#ifdef OTM_VALIDATE
    if (!is_canonical(terms)) throw std::logic_error("non-canonical ordinal produced");
#endif
    return Ordinal(std::move(terms), 0);
  }
};

namespace {

Ordinal make(std::vector<Term> terms) { return OrdinalAccess::make(std::move(terms)); }

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a * b;
}

// 1 + e, which is e itself when e is infinite.
Ordinal one_plus(const Ordinal& e) { return e.is_finite() ? Ordinal(e.to_natural() + 1) : e; }

// The e' with 1 + e' = e, for e >= 1.
Ordinal minus_one_left(const Ordinal& e) { return e.is_finite() ? Ordinal(e.to_natural() - 1) : e; }

Ordinal pow_natural(Ordinal base, std::uint64_t n) {
  Ordinal result = 1;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace

Ordinal::Ordinal(Natural n) {
  if (n.value != 0) terms_.push_back(Term{Ordinal(), n.value});
}

Ordinal::Ordinal(std::vector<Term> terms, int) : terms_(std::move(terms)) {}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  if (!is_canonical(terms)) {
    throw std::invalid_argument("terms are not in Cantor normal form");
  }
  return Ordinal(std::move(terms), 0);
}

Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal();
  return make({Term{exponent, coefficient}});
}

bool Ordinal::is_finite() const { return terms_.empty() || terms_.front().exponent.is_zero(); }

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

std::uint64_t Ordinal::finite_part() const { return is_successor() ? terms_.back().coefficient : 0; }

std::uint64_t Ordinal::to_natural() const {
  if (!is_finite()) throw std::domain_error("ordinal " + to_string(*this) + " is not finite");
  return finite_part();
}

Ordinal Ordinal::leading_exponent() const { return terms_.empty() ? Ordinal() : terms_.front().exponent; }

std::uint64_t Ordinal::leading_coefficient() const {
  return terms_.empty() ? 0 : terms_.front().coefficient;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

bool is_canonical(const std::vector<Term>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) return false;
    if (!is_canonical(terms[i].exponent.terms())) return false;
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) return false;
  }
  return true;
}

Order compare(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Order::less;
  if (c > 0) return Order::greater;
  return Order::equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Term& lead = b.terms().front();
  std::vector<Term> out;
  for (const Term& t : a.terms()) {
    if (t.exponent > lead.exponent) {
      out.push_back(t);
    } else {
      if (t.exponent == lead.exponent) {
        out.push_back(Term{lead.exponent, checked_add(t.coefficient, lead.coefficient)});
      }
      break;
    }
  }
  bool merged = !out.empty() && out.back().exponent == lead.exponent;
  for (std::size_t i = merged ? 1 : 0; i < b.terms().size(); ++i) out.push_back(b.terms()[i]);
  return make(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal& lead_exp = a.terms().front().exponent;
  std::vector<Term> out;
  for (const Term& t : b.terms()) {
    if (!t.exponent.is_zero()) {
      // a * w^f = w^(lead + f)
      out.push_back(Term{add(lead_exp, t.exponent), t.coefficient});
    } else {
      // a * n: leading coefficient scales, lower terms are kept once
      out.push_back(Term{lead_exp, checked_mul(a.terms().front().coefficient, t.coefficient)});
      for (std::size_t i = 1; i < a.terms().size(); ++i) out.push_back(a.terms()[i]);
    }
  }
  return make(std::move(out));
}

Ordinal pow(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return Ordinal(1);
  if (a.is_zero()) return Ordinal();
  if (a == Ordinal(1)) return a;
  // a^(w*beta + n) = a^(w*beta) * a^n
  CnfSplit split = cnf_split(b);
  Ordinal limit_factor = 1;
  if (!split.quotient.is_zero()) {
    if (a.is_finite()) {
      // n^w = w for finite n >= 2
      limit_factor = Ordinal::omega_power(split.quotient);
    } else {
      // a^w = w^(lead * w) for infinite a
      Ordinal e = mul(mul(a.leading_exponent(), Ordinal::omega()), split.quotient);
      limit_factor = Ordinal::omega_power(e);
    }
  }
  if (a.is_finite()) {
    std::uint64_t base = a.to_natural();
    std::uint64_t p = 1;
    for (std::uint64_t i = 0; i < split.finite_part; ++i) p = checked_mul(p, base);
    return mul(limit_factor, Ordinal(p));
  }
  return mul(limit_factor, pow_natural(a, split.finite_part));
}

Ordinal left_subtract(const Ordinal& b, const Ordinal& a) {
  if (a > b) throw std::domain_error("left_subtract: " + to_string(a) + " exceeds " + to_string(b));
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  while (i < x.size() && x[i] == y[i]) ++i;
  if (i == x.size()) return make(std::vector<Term>(y.begin() + static_cast<std::ptrdiff_t>(i), y.end()));
  std::vector<Term> out;
  if (x[i].exponent == y[i].exponent) {
    out.push_back(Term{y[i].exponent, y[i].coefficient - x[i].coefficient});
    ++i;
  }
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(i), y.end());
  return make(std::move(out));
}

CnfSplit cnf_split(const Ordinal& b) {
  std::vector<Term> quotient;
  for (const Term& t : b.terms()) {
    if (!t.exponent.is_zero()) quotient.push_back(Term{minus_one_left(t.exponent), t.coefficient});
  }
  return CnfSplit{make(std::move(quotient)), b.finite_part()};
}

Ordinal cnf_join(const CnfSplit& split) {
  std::vector<Term> out;
  for (const Term& t : split.quotient.terms()) out.push_back(Term{one_plus(t.exponent), t.coefficient});
  if (split.finite_part != 0) out.push_back(Term{Ordinal(), split.finite_part});
  return make(std::move(out));
}

namespace {

// pairing_square(w^e) for e >= 1.
Ordinal pairing_square_of_power(const Ordinal& e) {
  if (e.is_successor()) {
    Ordinal f = left_subtract(e, Ordinal(1));
    return Ordinal::omega_power(add(add(f, f), Ordinal(1)));
  }
  // e = p + w^g with g >= 1: the sup of e'*2+1 over e' < e is p + e.
  std::vector<Term> prefix = e.terms();
  if (--prefix.back().coefficient == 0) prefix.pop_back();
  return Ordinal::omega_power(add(make(std::move(prefix)), e));
}

}  // namespace

Ordinal pairing_square(const Ordinal& m) {
  if (m.is_finite()) {
    std::uint64_t n = m.to_natural();
    return Ordinal(checked_mul(n, n));
  }
  const Term& lead = m.terms().front();
  Ordinal head = Ordinal::omega_power(lead.exponent, lead.coefficient);
  Ordinal rest = make(std::vector<Term>(m.terms().begin() + 1, m.terms().end()));
  // Pairs with max below w^e * c.
  Ordinal result = add(pairing_square_of_power(lead.exponent),
                       Ordinal::omega_power(add(lead.exponent, lead.exponent), lead.coefficient - 1));
  // Each max value head + v (v < w^e) contributes a block head*2 + v + 1.
  result = add(result, mul(mul(head, Ordinal(2)), rest));
  if (rest.is_successor()) result = add(result, rest);
  return result;
}

Ordinal pair(const Ordinal& first, const Ordinal& second) {
  if (first < second) return add(pairing_square(second), first);
  return add(add(pairing_square(first), first), second);
}

std::pair<Ordinal, Ordinal> unpair(const Ordinal& code) {
  Ordinal m = largest_satisfying([&](const Ordinal& x) { return pairing_square(x) <= code; });
  Ordinal offset = left_subtract(code, pairing_square(m));
  if (offset < m) return {offset, m};
  return {m, left_subtract(offset, m)};
}

Ordinal largest_satisfying(const std::function<bool(const Ordinal&)>& pred) {
  Ordinal x;
  while (pred(add(x, Ordinal(1)))) {
    Ordinal e = largest_satisfying([&](const Ordinal& exp) { return pred(add(x, Ordinal::omega_power(exp))); });
    std::uint64_t lo = 1;
    std::uint64_t hi = 2;
    while (pred(add(x, Ordinal::omega_power(e, hi)))) {
      lo = hi;
      hi = checked_mul(hi, 2);
    }
    while (hi - lo > 1) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (pred(add(x, Ordinal::omega_power(e, mid)))) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    x = add(x, Ordinal::omega_power(e, lo));
  }
  return x;
}

int height(const Ordinal& a) {
  int h = 0;
  for (const Term& t : a.terms()) {
    if (!t.exponent.is_zero()) h = std::max(h, 1 + height(t.exponent));
  }
  return h;
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const Term& t : a.terms()) {
    if (!out.empty()) out += '+';
    const Ordinal& e = t.exponent;
    if (e.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    if (e == Ordinal(1)) {
      out += "w";
    } else if (e.is_finite()) {
      out += "w^" + std::to_string(e.to_natural());
    } else {
      out += "w^(" + to_string(e) + ")";
    }
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

}  // namespace otm
