#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "otm/claim2.hpp"
#include "otm/enumerate.hpp"
#include "otm/langs.hpp"
#include "otm/machine.hpp"
#include "otm/modelcheck.hpp"
#include "otm/text.hpp"

namespace otm::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

// Everything an invocation prints, kept structured so the text and JSON
// renderings cannot drift apart.
struct Report {
  std::string subcommand;
  json inputs = json::object();
  std::vector<std::string> lines;
  struct Field {
    std::string key;
    std::string value;
    bool quoted = false;  // quoted in text reports, so the empty word shows
  };
  std::vector<Field> fields;
  std::vector<LedgerEntry> ledger;

  void set(std::string key, std::string value, bool quoted = false) {
    fields.push_back({std::move(key), std::move(value), quoted});
  }
};

struct Settings {
  SimulationLimits limits;
  std::string report = "text";
};

void render(const Report& r, const Settings& s, std::ostream& out) {
  if (s.report == "json") {
    json j;
    j["config"] = {{"version", kVersion},
                   {"window", s.limits.window},
                   {"depth", s.limits.depth},
                   {"step_cap", s.limits.step_cap}};
    j["subcommand"] = r.subcommand;
    j["inputs"] = r.inputs;
    for (const auto& f : r.fields) j[f.key] = f.value;
    j["ledger"] = json::array();
    for (const LedgerEntry& e : r.ledger) j["ledger"].push_back({{"phase", e.phase}, {"cost", to_string(e.cost)}});
    if (!r.lines.empty()) j["lines"] = r.lines;
    out << j.dump(2) << '\n';
    return;
  }
  out << "# otmlab " << kVersion << ' ' << r.subcommand << " window=" << s.limits.window
      << " depth=" << s.limits.depth << " step_cap=" << s.limits.step_cap << '\n';
  for (const std::string& line : r.lines) out << line << '\n';
  for (const auto& f : r.fields) {
    out << f.key << ' ' << (f.quoted ? '"' + f.value + '"' : f.value) << '\n';
  }
  for (const LedgerEntry& e : r.ledger) out << "ledger " << e.phase << ' ' << e.cost << '\n';
}

// A parse failure in a named input, reported as "<source>: offset N: ...".
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T, typename F>
T parse_input(const std::string& source, const std::string& text, F&& parser) {
  try {
    return parser(text);
  } catch (const ParseError& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Word word_arg(const std::string& flag, const std::string& text) {
  return parse_input<Word>(flag, text, [](const std::string& t) { return parse_word(t); });
}

Ordinal ordinal_arg(const std::string& flag, const std::string& text) {
  return parse_input<Ordinal>(flag, text, [](const std::string& t) { return parse_ordinal(t); });
}

Program program_file(const std::string& path) {
  return parse_input<Program>(path, read_file(path), [](const std::string& t) { return parse_program(t); });
}

ProgramIndex index_arg(const std::string& text) {
  try {
    return parse_index(text);
  } catch (const std::exception& e) {
    throw InputError("--i: " + std::string(e.what()));
  }
}

std::string index_text(const ProgramIndex& i) { return i.str(); }

void describe_run(Report& r, const RunOutcome& o) {
  r.set("outcome", to_string(o.kind));
  r.set("time", to_string(o.time));
  if (o.kind == OutcomeKind::halted) {
    r.set("accept", std::to_string(o.accept));
    r.set("output", o.output ? to_string(*o.output) : "", true);
  }
  r.set("steps", std::to_string(o.concrete_steps));
  r.set("jumps", std::to_string(o.limit_jumps));
  if (!o.note.empty()) r.set("note", o.note);
}

int membership_report(Report& r, const Membership& m) {
  r.set("verdict", to_string(m.value));
  r.set("witness_time", m.witness_time ? to_string(*m.witness_time) : "none");
  r.set("budget", to_string(m.budget));
  r.set("index", index_text(m.index));
  r.set("inner", to_string(m.inner.kind));
  if (!m.inner.note.empty()) r.set("note", m.inner.note);
  return m.value == Verdict::undetermined ? kUndetermined : kResolved;
}

// Recursive descent for ordinal expressions.
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal v = sum();
    skip();
    if (pos_ < text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Ordinal sum() {
    Ordinal v = product();
    while (consume('+')) v = add(v, product());
    return v;
  }
  Ordinal product() {
    Ordinal v = power();
    while (consume('*')) v = mul(v, power());
    return v;
  }
  Ordinal power() {
    Ordinal base = atom();
    if (consume('^')) return pow(base, power());
    return base;
  }
  Ordinal atom() {
    skip();
    if (consume('(')) {
      Ordinal v = sum();
      if (!consume(')')) throw ParseError(pos_, "expected ')'");
      return v;
    }
    if (consume('w')) return Ordinal::omega();
    const std::size_t start = pos_;
    std::uint64_t n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (n > (UINT64_MAX - digit) / 10) throw ParseError(start, "natural number does not fit in 64 bits");
      n = n * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected a natural number, w or '('");
    return Ordinal(n);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int run_batch(const std::string& path, std::size_t jobs, std::ostream& out, std::ostream& err) {
  struct Instance {
    std::string line;
    std::ostringstream out;
    std::ostringstream err;
    int code = 0;
  };
  std::vector<Instance> instances;
  {
    std::istringstream in(read_file(path));
    for (std::string line; std::getline(in, line);) {
      if (auto semi = line.find(';'); semi != std::string::npos) line.erase(semi);
      if (tokenize(line).empty()) continue;
      instances.emplace_back().line = line;
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < instances.size();) {
      Instance& inst = instances[k];
      auto args = tokenize(inst.line);
      if (args.front() == "batch") {
        inst.err << "error: batch files cannot nest\n";
        inst.code = kUsageError;
        continue;
      }
      inst.code = run_cli(args, inst.out, inst.err);
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, instances.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  int worst = kResolved;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const Instance& inst = instances[k];
    out << "== [" << k << "] " << inst.line << " (exit " << inst.code << ")\n" << inst.out.str();
    err << inst.err.str();
    if (inst.code == kUsageError) {
      worst = kUsageError;
    } else if (inst.code == kUndetermined && worst == kResolved) {
      worst = kUndetermined;
    }
  }
  return worst;
}

}  // namespace

Ordinal evaluate_expression(std::string_view text) { return ExpressionParser(text).parse(); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinal Turing machine complexity lab", "otmlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Settings settings;
  app.add_option("--window", settings.limits.window, "longest candidate period, in events")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", settings.limits.depth, "deepest nesting of limit jumps")->check(CLI::NonNegativeNumber);
  app.add_option("--step-cap", settings.limits.step_cap, "concrete steps allowed per run")
      ->check(CLI::PositiveNumber);
  app.add_option("--report", settings.report, "report format")->check(CLI::IsMember({"text", "json"}));

  std::string program_path, input, budget_text, alpha_text, index_text_arg, expression, structure_path,
      formulas_path, axioms_path, min_height_text = "0", batch_path;
  std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());

  auto* eval_cmd = app.add_subcommand("ordinal-eval", "evaluate an ordinal expression");
  eval_cmd->add_option("expression", expression, "e.g. \"(w+1)^2*3\"")->required();

  auto* run_cmd = app.add_subcommand("run", "run a program under an ordinal budget");
  auto* trace_cmd = app.add_subcommand("trace", "run a program and print every event");
  for (auto* cmd : {run_cmd, trace_cmd}) {
    cmd->add_option("program", program_path, "program assembly file")->required();
    cmd->add_option("--input", input, "input word, e.g. \"1^w,0\"");
    cmd->add_option("--budget", budget_text, "step budget as an ordinal")->required();
  }

  auto* claim2_cmd = app.add_subcommand("claim2", "cost-accounted replay of the speedup decider");
  claim2_cmd->add_option("--i", index_text_arg, "program index")->required();
  claim2_cmd->add_option("--input", input, "input word with length >= w^2")->required();

  auto* x_cmd = app.add_subcommand("decide-x", "decide membership in the Ladner language X");
  auto* speedup_cmd = app.add_subcommand("decide-speedup", "decide membership in the speedup language L");
  auto* hier_cmd = app.add_subcommand("decide-hier", "decide membership in the hierarchy language L_alpha");
  for (auto* cmd : {x_cmd, speedup_cmd, hier_cmd}) {
    cmd->add_option("--input", input, "input word")->required();
  }
  hier_cmd->add_option("--alpha", alpha_text, "hierarchy level, at least 1")->required();

  auto* mc_cmd = app.add_subcommand("modelcheck", "evaluate sentences in a coded structure");
  mc_cmd->add_option("structure", structure_path, "structure file")->required();
  mc_cmd->add_option("formulas", formulas_path, "file of sentences")->required();

  auto* cert_cmd = app.add_subcommand("verify-cert", "check a finite certificate for membership in X");
  cert_cmd->add_option("--input", input, "the word x")->required();
  cert_cmd->add_option("--structure", structure_path, "structure file")->required();
  cert_cmd->add_option("--axioms", axioms_path, "file of axioms")->required();
  cert_cmd->add_option("--min-height", min_height_text, "required height of the well-founded part");

  auto* enum_cmd = app.add_subcommand("enumerate", "decode a program index, or encode a program");
  auto* enum_i = enum_cmd->add_option("--i", index_text_arg, "program index");
  auto* enum_p = enum_cmd->add_option("--program", program_path, "program assembly file to encode");
  enum_i->excludes(enum_p);
  enum_p->excludes(enum_i);

  auto* batch_cmd = app.add_subcommand("batch", "run one invocation per line of a file");
  batch_cmd->add_option("file", batch_path, "batch file")->required();
  batch_cmd->add_option("--jobs", jobs, "concurrent instances")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kResolved : kUsageError;
  }

  try {
    if (batch_cmd->parsed()) return run_batch(batch_path, jobs, out, err);

    Report r;
    int code = kResolved;
    if (eval_cmd->parsed()) {
      r.subcommand = "ordinal-eval";
      r.inputs["expression"] = expression;
      Ordinal v = parse_input<Ordinal>("expression", expression,
                                       [](const std::string& t) { return evaluate_expression(t); });
      CnfSplit split = cnf_split(v);
      r.set("value", to_string(v));
      r.set("quotient", to_string(split.quotient));
      r.set("finite_part", std::to_string(split.finite_part));
    } else if (run_cmd->parsed() || trace_cmd->parsed()) {
      const bool tracing = trace_cmd->parsed();
      r.subcommand = tracing ? "trace" : "run";
      r.inputs = {{"program", program_path}, {"input", input}, {"budget", budget_text}};
      Program p = program_file(program_path);
      Word w = word_arg("--input", input);
      Ordinal budget = ordinal_arg("--budget", budget_text);
      if (budget.is_zero()) throw InputError("--budget: must be at least 1");
      std::ostringstream trace;
      TraceWriter writer(trace, p);
      RunOutcome o = run(p, w, budget, settings.limits, tracing ? &writer : nullptr);
      if (tracing) {
        std::istringstream lines(trace.str());
        for (std::string line; std::getline(lines, line);) r.lines.push_back(line);
      }
      describe_run(r, o);
      if (o.kind == OutcomeKind::limit_undetermined) code = kUndetermined;
    } else if (claim2_cmd->parsed()) {
      r.subcommand = "claim2";
      r.inputs = {{"i", index_text_arg}, {"input", input}};
      ProgramIndex i = index_arg(index_text_arg);
      Word w = word_arg("--input", input);
      if (w.length() < mul(Ordinal::omega(), Ordinal::omega())) {
        throw InputError("--input: length " + to_string(w.length()) + " is below w^2");
      }
      Claim2Outcome c = claim2_simulate(i, w, settings.limits);
      const Ordinal bound = mul(w.length(), Ordinal(4));
      r.set("index", index_text(i));
      r.set("step_cost", std::to_string(c.step_cost));
      r.set("inner", to_string(c.inner.kind));
      r.set("outcome", to_string(c.outcome.kind));
      if (c.outcome.kind == OutcomeKind::halted) {
        r.set("accept", std::to_string(c.outcome.accept));
        r.set("simulated_steps", to_string(c.simulated_steps));
        r.set("stopwatch", std::string(c.stopwatch.tape == 0 ? "T0" : "T1") + "@" +
                               to_string(c.stopwatch.position) + (c.stopwatch.exhausted ? " exhausted" : ""));
      }
      r.set("time", to_string(c.outcome.time));
      r.set("bound", to_string(bound));
      r.set("within_bound", c.outcome.time < bound ? "yes" : "no");
      r.ledger = c.outcome.ledger;
      if (c.outcome.kind == OutcomeKind::limit_undetermined) code = kUndetermined;
    } else if (x_cmd->parsed() || speedup_cmd->parsed() || hier_cmd->parsed()) {
      Word w = word_arg("--input", input);
      r.inputs["input"] = input;
      if (w.length() < Ordinal::omega()) throw InputError("--input: length " + to_string(w.length()) + " is finite");
      if (x_cmd->parsed()) {
        r.subcommand = "decide-x";
        code = membership_report(r, decide_X(w, settings.limits));
      } else if (speedup_cmd->parsed()) {
        r.subcommand = "decide-speedup";
        code = membership_report(r, decide_L_speedup(w, settings.limits));
      } else {
        r.subcommand = "decide-hier";
        r.inputs["alpha"] = alpha_text;
        Ordinal alpha = ordinal_arg("--alpha", alpha_text);
        if (alpha.is_zero()) throw InputError("--alpha: must be at least 1");
        code = membership_report(r, decide_L_hierarchy(w, alpha, settings.limits));
      }
    } else if (mc_cmd->parsed()) {
      r.subcommand = "modelcheck";
      r.inputs = {{"structure", structure_path}, {"formulas", formulas_path}};
      CodedStructure s = parse_input<CodedStructure>(structure_path, read_file(structure_path),
                                                     [](const std::string& t) { return parse_structure(t); });
      auto sentences = parse_input<std::vector<FormulaPtr>>(
          formulas_path, read_file(formulas_path), [](const std::string& t) { return parse_formulas(t); });
      for (const SentenceReport& rep : check_fragment(s, sentences)) {
        r.lines.push_back(std::to_string(rep.index) + (rep.holds ? " TRUE" : " FALSE") +
                          " cost=" + to_string(rep.cost));
      }
      r.set("d", std::to_string(size_parameter(s)));
      r.set("sentences", std::to_string(sentences.size()));
    } else if (cert_cmd->parsed()) {
      r.subcommand = "verify-cert";
      r.inputs = {{"input", input}, {"structure", structure_path}, {"axioms", axioms_path},
                  {"min_height", min_height_text}};
      Word x = word_arg("--input", input);
      if (x.length() < Ordinal::omega()) throw InputError("--input: length " + to_string(x.length()) + " is finite");
      Ordinal min_height = ordinal_arg("--min-height", min_height_text);
      CodedStructure s = parse_input<CodedStructure>(structure_path, read_file(structure_path),
                                                     [](const std::string& t) { return parse_structure(t); });
      auto axioms = parse_input<std::vector<FormulaPtr>>(axioms_path, read_file(axioms_path),
                                                         [](const std::string& t) { return parse_formulas(t); });
      CertificateVerdict v = verify_certificate(x, s, axioms, CertificateOptions{min_height});
      for (const SentenceReport& rep : v.reports) {
        r.lines.push_back(std::to_string(rep.index) + (rep.holds ? " TRUE" : " FALSE") +
                          " cost=" + to_string(rep.cost));
      }
      r.set("verdict", v.accepted ? "ACCEPT" : "REJECT");
      if (!v.accepted) {
        r.set("clause", v.clause);
        r.set("reason", v.reason);
      }
      r.set("height", to_string(v.height));
    } else if (enum_cmd->parsed()) {
      r.subcommand = "enumerate";
      if (!program_path.empty()) {
        r.inputs["program"] = program_path;
        r.set("index", index_text(encode(program_file(program_path))));
      } else {
        if (index_text_arg.empty()) throw InputError("enumerate: give --i or --program");
        r.inputs["i"] = index_text_arg;
        ProgramIndex i = index_arg(index_text_arg);
        const bool valid = decode_program(i).has_value();
        std::istringstream lines(format_program(enumerate(i)));
        for (std::string line; std::getline(lines, line);) r.lines.push_back(line);
        r.set("index", index_text(i));
        r.set("well_formed", valid ? "yes" : "no (null program)");
      }
    }
    render(r, settings, out);
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace otm::cli
