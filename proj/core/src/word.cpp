#include "otm/word.hpp"

#include <stdexcept>

namespace otm {

Word Word::from_runs(std::vector<Run> runs) {
  Word w;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].length.is_zero()) throw std::invalid_argument("word run of length 0");
    if (runs[i].bit > 1) throw std::invalid_argument("word bit must be 0 or 1");
    if (i > 0 && runs[i].bit == runs[i - 1].bit) {
      throw std::invalid_argument("adjacent word runs carry the same bit");
    }
    w.length_ = add(w.length_, runs[i].length);
  }
  w.runs_ = std::move(runs);
  return w;
}

Word Word::uniform(const Ordinal& length, std::uint8_t bit) {
  Word w;
  w.append(length, bit);
  return w;
}

void Word::append(const Ordinal& length, std::uint8_t bit) {
  if (length.is_zero()) return;
  if (!runs_.empty() && runs_.back().bit == bit) {
    runs_.back().length = add(runs_.back().length, length);
  } else {
    runs_.push_back(Run{length, bit});
  }
  length_ = add(length_, length);
}

void Word::append(const Word& other) {
  for (const Run& r : other.runs_) append(r.length, r.bit);
}

std::uint8_t Word::at(const Ordinal& pos) const {
  Ordinal start;
  for (const Run& r : runs_) {
    Ordinal end = add(start, r.length);
    if (pos < end) return r.bit;
    start = std::move(end);
  }
  return 0;
}

Word Word::prefix(const Ordinal& n) const {
  Word out;
  Ordinal start;
  for (const Run& r : runs_) {
    if (start >= n) return out;
    Ordinal end = add(start, r.length);
    if (end <= n) {
      out.append(r.length, r.bit);
    } else {
      out.append(left_subtract(n, start), r.bit);
      return out;
    }
    start = std::move(end);
  }
  if (start < n) out.append(left_subtract(n, start), 0);
  return out;
}

Word Word::suffix_from(const Ordinal& from) const {
  Word out;
  Ordinal start;
  for (const Run& r : runs_) {
    Ordinal end = add(start, r.length);
    if (from < end) {
      if (from <= start) {
        out.append(r.length, r.bit);
      } else {
        out.append(left_subtract(end, from), r.bit);
      }
    }
    start = std::move(end);
  }
  return out;
}

Word Word::slice(const Ordinal& from, const Ordinal& n) const { return suffix_from(from).prefix(n); }

Word Word::trimmed() const {
  if (runs_.empty() || runs_.back().bit != 0) return *this;
  Word out;
  for (std::size_t i = 0; i + 1 < runs_.size(); ++i) out.append(runs_[i].length, runs_[i].bit);
  return out;
}

void Tape::fill(const Ordinal& from, const Ordinal& n, std::uint8_t bit) {
  if (n.is_zero()) return;
  if (bit == 0 && blank_from(from)) return;
  Word next = cells_.prefix(from);
  next.append(n, bit);
  next.append(cells_.suffix_from(add(from, n)));
  cells_ = next.trimmed();
}

std::string to_string(const Word& w) {
  std::string out;
  for (const Run& r : w.runs()) {
    if (!out.empty()) out += ',';
    out += static_cast<char>('0' + r.bit);
    if (r.length == Ordinal(1)) continue;
    std::string len = to_string(r.length);
    if (r.length != Ordinal::omega() && !r.length.is_finite()) {
      out += "^(" + len + ")";
    } else {
      out += "^" + len;
    }
  }
  return out;
}

}  // namespace otm
