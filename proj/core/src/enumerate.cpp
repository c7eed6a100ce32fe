#include "otm/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace otm {

namespace {

constexpr std::uint64_t kMaxStates = 1 << 12;

unsigned bits_for(std::uint64_t values) {
  unsigned b = 0;
  while ((std::uint64_t{1} << b) < values) ++b;
  return b;
}

std::uint64_t pow3(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 3;
  return r;
}

Transition default_row(std::uint32_t halt, std::uint32_t read, std::size_t tapes) {
  return Transition{halt, read, std::vector<Move>(tapes, Move::stay)};
}

class BitReader {
 public:
  explicit BitReader(std::vector<bool> bits) : bits_(std::move(bits)) {}

  bool done() const { return pos_ == bits_.size(); }

  std::optional<std::uint64_t> fixed(unsigned width) {
    if (width > 63 || bits_.size() - pos_ < width) return std::nullopt;
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1U) | (bits_[pos_++] ? 1U : 0U);
    return v;
  }

  std::optional<std::uint64_t> gamma() {
    unsigned zeros = 0;
    while (pos_ < bits_.size() && !bits_[pos_]) {
      ++zeros;
      ++pos_;
    }
    if (zeros > 62) return std::nullopt;
    return fixed(zeros + 1);
  }

 private:
  std::vector<bool> bits_;
  std::size_t pos_ = 0;
};

class BitWriter {
 public:
  void fixed(std::uint64_t v, unsigned width) {
    for (unsigned i = width; i-- > 0;) bits_.push_back(((v >> i) & 1U) != 0);
  }
  void gamma(std::uint64_t v) {
    unsigned width = 0;
    while ((v >> width) > 1) ++width;
    for (unsigned i = 0; i < width; ++i) bits_.push_back(false);
    fixed(v, width + 1);
  }
  ProgramIndex index() const {
    ProgramIndex i = 1;
    for (bool b : bits_) i = (i << 1) | (b ? 1 : 0);
    return i;
  }

 private:
  std::vector<bool> bits_;
};

}  // namespace

std::optional<Program> decode_program(const ProgramIndex& index) {
  if (index <= 0) return std::nullopt;
  std::vector<bool> bits;
  for (ProgramIndex i = index; i > 1; i >>= 1) bits.push_back(bit_test(i, 0));
  std::reverse(bits.begin(), bits.end());
  BitReader in(std::move(bits));

  auto states_minus_one = in.gamma();
  auto tapes_minus_one = in.gamma();
  if (!states_minus_one || !tapes_minus_one) return std::nullopt;
  std::uint64_t states = *states_minus_one + 1;
  std::uint64_t tapes = *tapes_minus_one + 1;
  if (states > kMaxStates || tapes > Program::kMaxTapes) return std::nullopt;

  const auto halt = static_cast<std::uint32_t>(states - 1);
  const std::uint32_t masks = 1U << tapes;
  const std::uint64_t move_values = pow3(tapes);
  std::vector<Transition> table;
  for (std::uint64_t s = 0; s + 1 < states; ++s) {
    for (std::uint32_t read = 0; read < masks; ++read) {
      auto flag = in.fixed(1);
      if (!flag) return std::nullopt;
      if (*flag == 0) {
        table.push_back(default_row(halt, read, tapes));
        continue;
      }
      auto next = in.fixed(bits_for(states));
      auto write = in.fixed(static_cast<unsigned>(tapes));
      auto moves = in.fixed(bits_for(move_values));
      if (!next || !write || !moves || *next >= states || *moves >= move_values) return std::nullopt;
      Transition row{static_cast<std::uint32_t>(*next), static_cast<std::uint32_t>(*write), {}};
      std::uint64_t digits = *moves;
      for (std::size_t t = 0; t < tapes; ++t) {
        row.moves.push_back(static_cast<Move>(digits % 3));
        digits /= 3;
      }
      if (row == default_row(halt, read, tapes)) return std::nullopt;
      table.push_back(std::move(row));
    }
  }
  if (!in.done()) return std::nullopt;
  return Program(states, tapes, std::move(table));
}

Program enumerate(const ProgramIndex& index) {
  if (auto p = decode_program(index)) return *std::move(p);
  return Program::null_program();
}

ProgramIndex encode(const Program& p) {
  BitWriter out;
  out.gamma(p.state_count() - 1);
  out.gamma(p.tape_count() - 1);
  const std::size_t tapes = p.tape_count();
  for (std::uint32_t s = 0; s < p.halt(); ++s) {
    for (std::uint32_t read = 0; read < p.read_masks(); ++read) {
      const Transition& row = p.rule(s, read);
      if (row == default_row(p.halt(), read, tapes)) {
        out.fixed(0, 1);
        continue;
      }
      out.fixed(1, 1);
      out.fixed(row.next, bits_for(p.state_count()));
      out.fixed(row.write, static_cast<unsigned>(tapes));
      std::uint64_t digits = 0;
      for (std::size_t t = tapes; t-- > 0;) digits = digits * 3 + static_cast<std::uint64_t>(row.moves[t]);
      out.fixed(digits, bits_for(pow3(tapes)));
    }
  }
  return out.index();
}

ProgramIndex parse_index(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("program index must be a decimal natural number: '" + text + "'");
  }
  return ProgramIndex(text);
}

}  // namespace otm
