#include "otm/machine.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

namespace otm {

namespace {

std::size_t hash_ordinal(const Ordinal& a) { return std::hash<std::string>{}(to_string(a)); }

Ordinal omega() { return Ordinal::omega(); }

Ordinal predecessor(const Ordinal& a) {
  std::vector<Term> terms = a.terms();
  if (--terms.back().coefficient == 0) terms.pop_back();
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

std::uint32_t Configuration::read_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t < tapes.size(); ++t) {
    if (tapes[t].read(heads[t]) != 0) mask |= 1U << t;
  }
  return mask;
}

Configuration initial_configuration(const Program& p, const Word& input) {
  Configuration c;
  c.state = p.start();
  c.heads.assign(p.tape_count(), Ordinal());
  c.tapes.assign(p.tape_count(), Tape());
  c.tapes[0] = Tape(input);
  return c;
}

Configuration step(const Configuration& c, const Program& p) {
  const Transition& rule = p.rule(c.state, c.read_mask());
  Configuration next = c;
  next.state = rule.next;
  for (std::size_t t = 0; t < p.tape_count(); ++t) {
    next.tapes[t].write(c.heads[t], static_cast<std::uint8_t>((rule.write >> t) & 1U));
    Ordinal& h = next.heads[t];
    switch (rule.moves[t]) {
      case Move::right:
        h = add(h, Ordinal(1));
        break;
      case Move::stay:
        break;
      case Move::left:
        // predecessor at successor positions, reset to 0 at limits and at 0
        h = h.is_successor() ? predecessor(h) : Ordinal();
        break;
    }
  }
  return next;
}

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::halted:
      return "halted";
    case OutcomeKind::out_of_budget:
      return "out_of_budget";
    case OutcomeKind::limit_undetermined:
      return "limit_undetermined";
  }
  return "?";
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->hash != b->hash || a->level != b->level) return false;
  if (a->level == 0) return a->state == b->state && a->read == b->read && a->rule == b->rule;
  if (a->duration != b->duration || a->body.size() != b->body.size()) return false;
  for (std::size_t i = 0; i < a->body.size(); ++i) {
    if (!same_signature(a->body[i], b->body[i])) return false;
  }
  return true;
}

Event step_event(const Configuration& before, const Program& p) {
  auto sig = std::make_shared<EventSignature>();
  sig->level = 0;
  sig->state = before.state;
  sig->read = before.read_mask();
  sig->rule = p.rule(before.state, sig->read);
  sig->duration = Ordinal(1);
  std::size_t h = 0;
  boost::hash_combine(h, sig->state);
  boost::hash_combine(h, sig->read);
  boost::hash_combine(h, sig->rule.next);
  boost::hash_combine(h, sig->rule.write);
  for (Move m : sig->rule.moves) boost::hash_combine(h, static_cast<int>(m));
  sig->hash = h;

  Event e;
  e.duration = Ordinal(1);
  e.min_state = before.state;
  e.level = 0;
  for (std::size_t t = 0; t < p.tape_count(); ++t) {
    const std::uint8_t cell = before.tapes[t].read(before.heads[t]);
    e.min_cell.push_back(cell);
    e.clean.push_back(((sig->rule.write >> t) & 1U) == cell);
    switch (sig->rule.moves[t]) {
      case Move::right:
        e.motion.push_back(Motion::sweeping);
        break;
      case Move::stay:
        e.motion.push_back(Motion::stationary);
        break;
      case Move::left:
        e.motion.push_back(before.heads[t].is_zero() ? Motion::stationary : Motion::other);
        break;
    }
  }
  e.signature = std::move(sig);
  return e;
}

void History::push(Event e, Configuration end, Ordinal end_time) {
  entries_.push_back(Entry{std::move(end_), std::move(end_time_), std::move(e)});
  end_ = std::move(end);
  end_time_ = std::move(end_time);
}

void History::collapse(std::size_t count, Event e, Configuration end, Ordinal end_time) {
  if (count == 0 || count > entries_.size()) throw std::logic_error("collapse outside history");
  Entry first = std::move(entries_[entries_.size() - count]);
  entries_.erase(entries_.end() - static_cast<std::ptrdiff_t>(count), entries_.end());
  entries_.push_back(Entry{std::move(first.start), std::move(first.start_time), std::move(e)});
  end_ = std::move(end);
  end_time_ = std::move(end_time);
}

void History::trim(std::size_t max_events) {
  while (entries_.size() > max_events) entries_.pop_front();
}

const Configuration& History::boundary(std::size_t i) const {
  return i == entries_.size() ? end_ : entries_[i].start;
}

const Ordinal& History::boundary_time(std::size_t i) const {
  return i == entries_.size() ? end_time_ : entries_[i].start_time;
}

namespace {

struct PeriodShape {
  std::vector<Motion> motion;
  std::vector<Ordinal> shift;  // per-period head displacement, sweeping tapes
  Ordinal duration;
  std::uint32_t min_state = 0;
  std::vector<std::uint8_t> min_cell;
  std::vector<bool> clean;
  int level = 0;
};

// Events [from, from + p) summarised as one block; nullopt if some tape
// moves irregularly somewhere in the block.
std::optional<PeriodShape> shape_of(const History& h, std::size_t from, std::size_t p, std::size_t tapes) {
  PeriodShape s;
  s.motion.assign(tapes, Motion::stationary);
  s.min_cell.assign(tapes, 1);
  s.clean.assign(tapes, true);
  std::vector<bool> irregular(tapes, false);
  s.min_state = h.entry(from).event.min_state;
  for (std::size_t i = from; i < from + p; ++i) {
    const Event& e = h.entry(i).event;
    s.min_state = std::min(s.min_state, e.min_state);
    s.level = std::max(s.level, e.level + 1);
    for (std::size_t t = 0; t < tapes; ++t) {
      if (e.motion[t] == Motion::other || e.motion[t] == Motion::returning) irregular[t] = true;
      if (e.motion[t] == Motion::sweeping) s.motion[t] = Motion::sweeping;
      s.min_cell[t] = std::min(s.min_cell[t], e.min_cell[t]);
      s.clean[t] = s.clean[t] && e.clean[t];
    }
  }
  const Configuration& a = h.boundary(from);
  const Configuration& b = h.boundary(from + p);
  for (std::size_t t = 0; t < tapes; ++t) {
    if (irregular[t]) {
      // Back at cell 0 with the tape untouched: the liminf head is 0 and
      // the tape keeps its contents.
      if (!s.clean[t] || !a.heads[t].is_zero() || !b.heads[t].is_zero()) return std::nullopt;
      s.motion[t] = Motion::returning;
      s.shift.emplace_back();
    } else if (s.motion[t] == Motion::sweeping) {
      if (b.heads[t] <= a.heads[t]) return std::nullopt;
      s.shift.push_back(left_subtract(b.heads[t], a.heads[t]));
    } else {
      if (b.heads[t] != a.heads[t]) return std::nullopt;
      s.shift.emplace_back();
    }
  }
  std::uint64_t steps = 0;
  for (std::size_t i = from + p; i-- > from;) {
    const Event& e = h.entry(i).event;
    if (e.level == 0) {
      ++steps;
      continue;
    }
    s.duration = add(add(e.duration, Ordinal(steps)), s.duration);
    steps = 0;
  }
  s.duration = add(Ordinal(steps), s.duration);
  return s;
}

// The future of a block depends only on the state, stationary head cells
// and, for sweeping tapes, the cells in [head, head + shift * w).
bool same_view(const Configuration& a, const Configuration& b, const PeriodShape& s) {
  if (a.state != b.state) return false;
  for (std::size_t t = 0; t < a.tapes.size(); ++t) {
    if (s.motion[t] == Motion::stationary) {
      if (a.tapes[t].read(a.heads[t]) != b.tapes[t].read(b.heads[t])) return false;
    } else if (s.motion[t] == Motion::returning) {
      if (a.tapes[t] != b.tapes[t]) return false;
    } else {
      Ordinal reach = mul(s.shift[t], omega());
      if (a.tapes[t].slice(a.heads[t], reach) != b.tapes[t].slice(b.heads[t], reach)) return false;
    }
  }
  return true;
}

}  // namespace

LimitJump limit_jump(const History& history, const Program& p, const SimulationLimits& limits) {
  LimitJump result;
  const std::size_t n = history.size();
  const std::size_t tapes = p.tape_count();
  const std::size_t max_period = std::min(limits.window, n / 2);
  for (std::size_t period = 1; period <= max_period; ++period) {
    const std::size_t first = n - 2 * period;
    const std::size_t second = n - period;
    bool repeats = true;
    for (std::size_t i = 0; i < period && repeats; ++i) {
      repeats = same_signature(history.entry(first + i).event.signature,
                               history.entry(second + i).event.signature);
    }
    if (!repeats) continue;

    auto s1 = shape_of(history, first, period, tapes);
    auto s2 = shape_of(history, second, period, tapes);
    if (!s1 || !s2 || s1->motion != s2->motion || s1->shift != s2->shift) continue;
    const PeriodShape& shape = *s2;
    const Configuration& b0 = history.boundary(first);
    const Configuration& b1 = history.boundary(second);
    const Configuration& b2 = history.end();
    if (!same_view(b0, b1, shape) || !same_view(b1, b2, shape)) continue;

    // The block provably repeats omega times from here on.
    result.period = period;
    result.level = shape.level;
    if (shape.level > limits.depth) {
      result.status = LimitJump::Status::undetermined;
      result.reason = "repetition nests deeper than the configured jump depth " + std::to_string(limits.depth);
      return result;
    }

    Configuration next = b2;
    next.state = shape.min_state;
    for (std::size_t t = 0; t < tapes; ++t) {
      if (shape.motion[t] == Motion::stationary) {
        next.tapes[t].write(next.heads[t], shape.min_cell[t]);
        continue;
      }
      if (shape.motion[t] == Motion::returning) continue;
      // Cells passed by the sweep settle to repeated copies of one block.
      const Ordinal& from = b1.heads[t];
      Word block = b2.tapes[t].slice(from, shape.shift[t]);
      if (block.runs().size() != 1) {
        result.status = LimitJump::Status::undetermined;
        result.reason = "tape " + std::to_string(t) + " settles to an omega-periodic pattern " +
                        to_string(block) + " with no finite run-length form";
        return result;
      }
      Ordinal reach = mul(shape.shift[t], omega());
      next.tapes[t].fill(from, reach, block.runs().front().bit);
      next.heads[t] = add(from, reach);
    }

    Ordinal span = mul(shape.duration, omega());
    result.status = LimitJump::Status::jumped;
    result.time = add(history.boundary_time(first), span);

    auto sig = std::make_shared<EventSignature>();
    sig->level = shape.level;
    sig->duration = span;
    std::size_t h = hash_ordinal(span);
    boost::hash_combine(h, shape.level);
    for (std::size_t i = 0; i < period; ++i) {
      sig->body.push_back(history.entry(second + i).event.signature);
      boost::hash_combine(h, sig->body.back()->hash);
    }
    sig->hash = h;
    result.event.signature = std::move(sig);
    result.event.duration = span;
    result.event.min_state = shape.min_state;
    result.event.motion = shape.motion;
    result.event.min_cell = shape.min_cell;
    result.event.clean = shape.clean;
    result.event.level = shape.level;

    bool eternal = next.state == b0.state;
    for (std::size_t t = 0; t < tapes && eternal; ++t) {
      if (shape.motion[t] == Motion::stationary) {
        eternal = next.tapes[t].read(next.heads[t]) == b0.tapes[t].read(b0.heads[t]);
      } else if (shape.motion[t] == Motion::returning) {
        eternal = next.tapes[t] == b0.tapes[t];
      } else {
        eternal = b0.tapes[t].blank_from(b0.heads[t]) && next.tapes[t].blank_from(next.heads[t]);
      }
    }
    result.eternal = eternal;
    result.config = std::move(next);
    return result;
  }
  return result;
}

void TraceWriter::line(const Ordinal& time, const Configuration& c) {
  os_ << "t=" << time << " state=" << program_.state_name(c.state) << " heads=";
  for (std::size_t t = 0; t < c.heads.size(); ++t) os_ << (t ? "," : "") << c.heads[t];
  os_ << '\n';
}

void TraceWriter::on_step(const Ordinal& time, const Configuration& c) { line(time, c); }

void TraceWriter::on_jump(const LimitJump& jump) {
  os_ << "JUMP period=" << jump.period << " to t=" << jump.time << '\n';
  line(jump.time, jump.config);
}

RunOutcome run(const Program& p, const Word& input, const Ordinal& budget, const SimulationLimits& limits,
               RunObserver* observer) {
  if (budget.is_zero()) throw std::invalid_argument("run budget must be at least 1");
  if (limits.window == 0) throw std::invalid_argument("pattern window must be positive");

  RunOutcome out;
  Configuration config = initial_configuration(p, input);
  Ordinal time;
  History history(config, time);

  auto finish = [&](OutcomeKind kind, Ordinal at, std::string note = {}) {
    out.kind = kind;
    out.time = std::move(at);
    out.note = std::move(note);
    if (kind == OutcomeKind::halted) {
      out.output = config.tapes[0].contents();
      out.accept = config.tapes[0].read(Ordinal());
    }
    out.final_config = config;
    return out;
  };

  std::size_t gap = 0, skip = 0;
  if (observer) observer->on_step(time, config);
  for (;;) {
    Event event = step_event(config, p);
    config = step(config, p);
    time = add(time, Ordinal(1));
    ++out.concrete_steps;
    if (observer) observer->on_step(time, config);
    if (config.state == p.halt()) return finish(OutcomeKind::halted, time);
    if (time >= budget) return finish(OutcomeKind::out_of_budget, time);

    history.push(std::move(event), config, time);
    // A block that repeats w times still does so a few steps later, so
    // failed searches back off; a jump resets the gap.
    if (skip > 0) {
      --skip;
      goto searched;
    }
    for (bool first = true;; first = false) {
      LimitJump jump = limit_jump(history, p, limits);
      if (jump.status == LimitJump::Status::no_pattern) {
        if (first) {
          gap = std::min<std::size_t>(2 * gap + 1, limits.window);
          skip = gap;
        }
        break;
      }
      gap = 0;
      if (jump.status == LimitJump::Status::undetermined) {
        return finish(OutcomeKind::limit_undetermined, time, jump.reason);
      }
      if (jump.time >= budget) {
        // The clock passes the budget inside the repetition, where the
        // machine cannot halt.
        return finish(OutcomeKind::out_of_budget, budget, "budget reached inside a limit repetition");
      }
      ++out.limit_jumps;
      config = jump.config;
      time = jump.time;
      history.collapse(2 * jump.period, jump.event, config, time);
      if (observer) observer->on_jump(jump);
      if (jump.eternal) {
        return finish(OutcomeKind::out_of_budget, budget, "limit configuration repeats; the run never halts");
      }
    }
  searched:
    history.trim(2 * limits.window);
    if (out.concrete_steps >= limits.step_cap) {
      return finish(OutcomeKind::limit_undetermined, time,
                    "no provable repetition within " + std::to_string(limits.step_cap) + " steps");
    }
  }
}

}  // namespace otm
