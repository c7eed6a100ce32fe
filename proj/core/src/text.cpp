#include "otm/text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace otm {

namespace {

// Cursor over a text buffer. `base` shifts reported offsets when a
// sub-string of a larger file is being parsed.
class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  std::size_t offset() const { return base_ + pos_; }
  void advance() { ++pos_; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(offset(), message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(base_ + pos, message);
  }

  void skip_space() {
    while (!done()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == ';') {
        while (!done() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::uint64_t parse_nat(Cursor& c) {
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a natural number");
  const std::size_t start = c.pos();
  std::uint64_t value = 0;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    const std::uint64_t digit = static_cast<std::uint64_t>(c.peek() - '0');
    if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
      c.fail_at(start, "natural number does not fit in 64 bits");
    }
    value = value * 10 + digit;
    c.advance();
  }
  return value;
}

Ordinal parse_ordinal_raw(Cursor& c);

Term parse_term(Cursor& c) {
  if (!c.consume('w')) return Term{Ordinal(), parse_nat(c)};
  Term t{Ordinal(1), 1};
  if (c.consume('^')) {
    if (c.consume('(')) {
      t.exponent = parse_ordinal_raw(c);
      c.expect(')', "')'");
    } else {
      t.exponent = Ordinal(parse_nat(c));
    }
  }
  if (c.consume('*')) t.coefficient = parse_nat(c);
  return t;
}

Ordinal parse_ordinal_raw(Cursor& c) {
  const std::size_t start = c.pos();
  std::vector<std::size_t> starts{c.pos()};
  std::vector<Term> terms{parse_term(c)};
  while (c.consume('+')) {
    starts.push_back(c.pos());
    terms.push_back(parse_term(c));
  }
  // A lone 0 is the empty sum; anything else must already be canonical.
  if (terms.size() == 1 && terms[0].exponent.is_zero() && terms[0].coefficient == 0) return Ordinal();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) c.fail_at(starts[i], "zero coefficient");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      c.fail_at(starts[i], "exponents must strictly decrease");
    }
  }
  Ordinal value = Ordinal::from_terms(std::move(terms));
  const std::string printed = to_string(value);
  const std::string_view written = c.text().substr(start, c.pos() - start);
  if (written != printed) {
    std::size_t i = 0;
    while (i < written.size() && i < printed.size() && written[i] == printed[i]) ++i;
    c.fail_at(start + i, "non-canonical spelling, expected '" + printed + "'");
  }
  return value;
}

Ordinal parse_ordinal_at(std::string_view text, std::size_t base) {
  Cursor c(text, base);
  Ordinal value = parse_ordinal_raw(c);
  if (!c.done()) c.fail("unexpected trailing input");
  return value;
}

// Splits a line into whitespace separated fields, remembering offsets.
struct Field {
  std::string_view text;
  std::size_t offset;
};

std::vector<Field> split_fields(std::string_view line, std::size_t base) {
  std::vector<Field> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    fields.push_back({line.substr(i, j - i), base + i});
    i = j;
  }
  return fields;
}

// Calls f(line, offset) for every line with comments removed.
template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto semi = line.find(';'); semi != std::string_view::npos) line = line.substr(0, semi);
    f(line, start);
    if (end == text.size()) break;
    start = end + 1;
  }
}

std::vector<Field> split_commas(const Field& field) {
  std::vector<Field> parts;
  std::size_t i = 0;
  while (true) {
    std::size_t j = field.text.find(',', i);
    if (j == std::string_view::npos) j = field.text.size();
    parts.push_back({field.text.substr(i, j - i), field.offset + i});
    if (j == field.text.size()) break;
    i = j + 1;
  }
  return parts;
}

std::uint32_t parse_bits(const Field& field, std::size_t tapes) {
  auto parts = split_commas(field);
  if (parts.size() != tapes) {
    throw ParseError(field.offset, "expected " + std::to_string(tapes) + " comma separated bits");
  }
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t < tapes; ++t) {
    if (parts[t].text == "1") {
      mask |= 1U << t;
    } else if (parts[t].text != "0") {
      throw ParseError(parts[t].offset, "expected bit 0 or 1");
    }
  }
  return mask;
}

std::vector<Move> parse_moves(const Field& field, std::size_t tapes) {
  auto parts = split_commas(field);
  if (parts.size() != tapes) {
    throw ParseError(field.offset, "expected " + std::to_string(tapes) + " comma separated moves");
  }
  std::vector<Move> moves;
  for (const Field& p : parts) {
    if (p.text == "L") {
      moves.push_back(Move::left);
    } else if (p.text == "S") {
      moves.push_back(Move::stay);
    } else if (p.text == "R") {
      moves.push_back(Move::right);
    } else {
      throw ParseError(p.offset, "expected move L, S or R");
    }
  }
  return moves;
}

std::string bits_text(std::uint32_t mask, std::size_t tapes) {
  std::string out;
  for (std::size_t t = 0; t < tapes; ++t) {
    if (t) out += ',';
    out += (mask >> t) & 1U ? '1' : '0';
  }
  return out;
}

bool valid_state_name(std::string_view name) {
  if (name.empty() || name[0] == '#') return false;
  for (char ch : name) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  }
  return true;
}

FormulaPtr parse_formula_at(Cursor& c);

std::string parse_symbol(Cursor& c, const char* what) {
  c.skip_space();
  std::string out;
  while (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_') {
    out += c.peek();
    c.advance();
  }
  if (out.empty()) c.fail(std::string("expected ") + what);
  return out;
}

FormulaPtr parse_formula_at(Cursor& c) {
  c.skip_space();
  c.expect('(', "'('");
  const std::size_t head_offset = c.pos();
  const std::string head = parse_symbol(c, "a connective");
  FormulaPtr result;
  if (head == "in" || head == "eq") {
    std::string x = parse_symbol(c, "a variable");
    std::string y = parse_symbol(c, "a variable");
    result = head == "in" ? fol::member(x, y) : fol::equal(x, y);
  } else if (head == "all" || head == "ex") {
    std::string v = parse_symbol(c, "a variable");
    FormulaPtr body = parse_formula_at(c);
    result = head == "all" ? fol::forall(v, body) : fol::exists(v, body);
  } else if (head == "not") {
    result = fol::negation(parse_formula_at(c));
  } else if (head == "implies" || head == "iff") {
    FormulaPtr f = parse_formula_at(c);
    FormulaPtr g = parse_formula_at(c);
    result = head == "implies" ? fol::implication(f, g) : fol::iff(f, g);
  } else if (head == "and" || head == "or") {
    result = parse_formula_at(c);
    int operands = 1;
    c.skip_space();
    while (c.peek() == '(') {
      FormulaPtr g = parse_formula_at(c);
      result = head == "and" ? fol::conjunction(result, g) : fol::disjunction(result, g);
      ++operands;
      c.skip_space();
    }
    if (operands < 2) c.fail_at(head_offset, "'" + head + "' needs at least two operands");
  } else {
    c.fail_at(head_offset, "unknown connective '" + head + "'");
  }
  c.skip_space();
  c.expect(')', "')'");
  return result;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return parse_ordinal_at(text, 0); }

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  Cursor c(text);
  while (true) {
    std::uint8_t bit = 0;
    if (c.consume('1')) {
      bit = 1;
    } else if (!c.consume('0')) {
      c.fail("expected bit 0 or 1");
    }
    Ordinal length(1);
    if (c.consume('^')) {
      const std::size_t start = c.pos();
      const bool parenthesised = c.consume('(');
      const std::size_t inner = c.pos();
      std::size_t end = inner;
      if (parenthesised) {
        int depth = 1;
        while (end < text.size() && depth > 0) {
          if (text[end] == '(') ++depth;
          if (text[end] == ')') --depth;
          if (depth > 0) ++end;
        }
        if (depth != 0) c.fail_at(start, "unbalanced parenthesis");
      } else {
        end = text.find(',', inner);
        if (end == std::string_view::npos) end = text.size();
      }
      length = parse_ordinal_at(text.substr(inner, end - inner), inner);
      while (c.pos() < end) c.advance();
      if (parenthesised) c.expect(')', "')'");
      if (length.is_zero()) c.fail_at(start, "runs must be nonempty");
    }
    w.append(length, bit);
    if (c.done()) break;
    c.expect(',', "','");
  }
  return w;
}

Program parse_program(std::string_view text) {
  struct Row {
    std::string from;
    std::uint32_t read;
    std::string to;
    std::uint32_t write;
    std::vector<Move> moves;
    std::size_t offset;
    std::size_t to_offset;
  };
  std::optional<std::size_t> tapes;
  std::optional<std::string> start, halt;
  std::vector<Row> rows;
  std::vector<std::string> order;
  auto note = [&](const std::string& name) {
    if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
  };

  for_each_line(text, [&](std::string_view line, std::size_t base) {
    auto fields = split_fields(line, base);
    if (fields.empty()) return;
    const std::string_view head = fields[0].text;
    if (head[0] == '#') {
      if (fields.size() != 2) throw ParseError(fields[0].offset, "directive takes one argument");
      if (head == "#tapes") {
        if (tapes) throw ParseError(fields[0].offset, "duplicate #tapes");
        Cursor c(fields[1].text, fields[1].offset);
        std::uint64_t k = parse_nat(c);
        if (!c.done()) c.fail("unexpected trailing input");
        if (k < 2 || k > Program::kMaxTapes) {
          throw ParseError(fields[1].offset, "tape count must be between 2 and " + std::to_string(Program::kMaxTapes));
        }
        tapes = k;
      } else if (head == "#start" || head == "#halt") {
        auto& slot = head == "#start" ? start : halt;
        if (slot) throw ParseError(fields[0].offset, "duplicate " + std::string(head));
        if (!valid_state_name(fields[1].text)) throw ParseError(fields[1].offset, "invalid state name");
        slot = std::string(fields[1].text);
      } else {
        throw ParseError(fields[0].offset, "unknown directive '" + std::string(head) + "'");
      }
      return;
    }
    if (!tapes) throw ParseError(fields[0].offset, "#tapes must precede the first row");
    if (fields.size() != 6 || fields[2].text != "->") {
      throw ParseError(fields[0].offset, "expected 'state read -> state write moves'");
    }
    for (int i : {0, 3}) {
      if (!valid_state_name(fields[i].text)) throw ParseError(fields[i].offset, "invalid state name");
    }
    Row row{std::string(fields[0].text), parse_bits(fields[1], *tapes), std::string(fields[3].text),
            parse_bits(fields[4], *tapes), parse_moves(fields[5], *tapes), fields[0].offset, fields[3].offset};
    note(row.from);
    rows.push_back(std::move(row));
  });
  for (const Row& row : rows) note(row.to);

  if (!tapes) throw ParseError(0, "missing #tapes directive");
  if (!start) {
    if (order.empty()) throw ParseError(0, "program has no rows and no #start");
    start = order.front();
  }
  if (!halt) halt = "qH";
  if (*start == *halt) throw ParseError(0, "start and halt states must differ");

  std::vector<std::string> names{*start};
  for (const std::string& s : order) {
    if (s != *start && s != *halt) names.push_back(s);
  }
  names.push_back(*halt);
  std::map<std::string, std::uint32_t> number;
  for (std::uint32_t i = 0; i < names.size(); ++i) number[names[i]] = i;

  const std::size_t masks = std::size_t{1} << *tapes;
  const std::uint32_t halt_index = static_cast<std::uint32_t>(names.size() - 1);
  std::vector<std::optional<Transition>> table(halt_index * masks);
  for (const Row& row : rows) {
    const std::uint32_t from = number.at(row.from);
    if (from == halt_index) throw ParseError(row.offset, "the halt state has no transitions");
    auto& slot = table[from * masks + row.read];
    if (slot) throw ParseError(row.offset, "duplicate row for " + row.from + " " + bits_text(row.read, *tapes));
    slot = Transition{number.at(row.to), row.write, row.moves};
  }
  std::vector<Transition> total;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) {
      throw ParseError(text.size(), "missing row for " + names[i / masks] + " " +
                                        bits_text(static_cast<std::uint32_t>(i % masks), *tapes));
    }
    total.push_back(*table[i]);
  }
  const std::size_t states = names.size();
  return Program(states, *tapes, std::move(total), std::move(names));
}

std::string format_program(const Program& p) {
  std::ostringstream out;
  out << "#tapes " << p.tape_count() << "\n";
  out << "#start " << p.state_name(p.start()) << "\n";
  out << "#halt " << p.state_name(p.halt()) << "\n";
  for (std::uint32_t q = 0; q < p.halt(); ++q) {
    for (std::uint32_t r = 0; r < p.read_masks(); ++r) {
      const Transition& t = p.rule(q, r);
      out << p.state_name(q) << ' ' << bits_text(r, p.tape_count()) << " -> " << p.state_name(t.next) << ' '
          << bits_text(t.write, p.tape_count()) << ' ';
      for (std::size_t k = 0; k < t.moves.size(); ++k) {
        if (k) out << ',';
        out << "LSR"[static_cast<int>(t.moves[k])];
      }
      out << "\n";
    }
  }
  return out.str();
}

CodedStructure parse_structure(std::string_view text) {
  std::optional<Ordinal> bound;
  std::vector<Ordinal> elements;
  std::vector<Edge> edges;
  std::size_t first_offset = 0;
  bool seen_any = false;
  for_each_line(text, [&](std::string_view line, std::size_t base) {
    auto fields = split_fields(line, base);
    if (fields.empty()) return;
    if (!seen_any) first_offset = fields[0].offset;
    seen_any = true;
    auto ord = [&](std::size_t i) { return parse_ordinal_at(fields[i].text, fields[i].offset); };
    const std::string_view head = fields[0].text;
    if (head == "bound" && fields.size() == 2) {
      if (bound) throw ParseError(fields[0].offset, "duplicate bound line");
      bound = ord(1);
    } else if (head == "edge" && fields.size() == 3) {
      edges.emplace_back(ord(1), ord(2));
    } else if (head == "element" && fields.size() == 2) {
      elements.push_back(ord(1));
    } else {
      throw ParseError(fields[0].offset, "expected 'bound <ord>', 'edge <ord> <ord>' or 'element <ord>'");
    }
  });
  try {
    return structure_from_edges(std::move(elements), edges, bound);
  } catch (const std::invalid_argument& e) {
    throw ParseError(first_offset, e.what());
  }
}

std::string format_structure(const CodedStructure& s) {
  std::ostringstream out;
  out << "bound " << to_string(s.bound) << "\n";
  std::set<Ordinal> related;
  for (const auto& [a, b] : decode_edges(s)) {
    out << "edge " << to_string(a) << ' ' << to_string(b) << "\n";
    related.insert(a);
    related.insert(b);
  }
  for (const Ordinal& x : s.domain) {
    if (!related.count(x)) out << "element " << to_string(x) << "\n";
  }
  return out.str();
}

FormulaPtr parse_formula(std::string_view text) {
  Cursor c(text);
  FormulaPtr f = parse_formula_at(c);
  c.skip_space();
  if (!c.done()) c.fail("unexpected trailing input");
  return f;
}

std::vector<FormulaPtr> parse_formulas(std::string_view text) {
  Cursor c(text);
  std::vector<FormulaPtr> out;
  c.skip_space();
  while (!c.done()) {
    out.push_back(parse_formula_at(c));
    c.skip_space();
  }
  return out;
}

}  // namespace otm
