#include "otm/modelcheck.hpp"

#include <algorithm>
#include <stdexcept>

namespace otm {

namespace {

Ordinal default_bound(const std::set<Ordinal>& code) {
  return code.empty() ? Ordinal() : add(*code.rbegin(), Ordinal(1));
}

void normalize_domain(std::vector<Ordinal>& domain) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
}

bool member_probe(const CodedStructure& s, const Ordinal& a, const Ordinal& b, CostMeter& meter) {
  const Ordinal target = pair(a, b);
  bool found = false;
  for (const Ordinal& c : s.code) {
    if (c == target) found = true;
  }
  meter.charge(s.code.size());
  return found;
}

const Ordinal& lookup(const Environment& env, const std::string& var) {
  auto it = env.find(var);
  if (it == env.end()) throw std::invalid_argument("unbound variable '" + var + "'");
  return it->second;
}

bool evaluate(const Formula& f, const CodedStructure& s, Environment& env, CostMeter& meter) {
  switch (f.kind) {
    case Formula::Kind::member:
      return member_probe(s, lookup(env, f.left), lookup(env, f.right), meter);
    case Formula::Kind::equal:
      return lookup(env, f.left) == lookup(env, f.right);
    case Formula::Kind::negation:
      return !evaluate(*f.a, s, env, meter);
    case Formula::Kind::conjunction:
      return evaluate(*f.a, s, env, meter) && evaluate(*f.b, s, env, meter);
    case Formula::Kind::disjunction:
      return evaluate(*f.a, s, env, meter) || evaluate(*f.b, s, env, meter);
    case Formula::Kind::implication:
      return !evaluate(*f.a, s, env, meter) || evaluate(*f.b, s, env, meter);
    case Formula::Kind::forall:
    case Formula::Kind::exists: {
      const bool universal = f.kind == Formula::Kind::forall;
      auto saved = env.find(f.left) != env.end() ? std::optional<Ordinal>(env[f.left]) : std::nullopt;
      bool result = universal;
      for (const Ordinal& x : s.domain) {
        env[f.left] = x;
        if (evaluate(*f.a, s, env, meter) != universal) {
          result = !universal;
          break;
        }
      }
      if (saved) {
        env[f.left] = *saved;
      } else {
        env.erase(f.left);
      }
      return result;
    }
  }
  return false;
}

}  // namespace

CodedStructure structure_from_edges(std::vector<Ordinal> domain, const std::vector<Edge>& edges,
                                    std::optional<Ordinal> bound) {
  CodedStructure s;
  for (const auto& [a, b] : edges) {
    s.code.insert(pair(a, b));
    domain.push_back(a);
    domain.push_back(b);
  }
  normalize_domain(domain);
  s.domain = std::move(domain);
  s.bound = bound ? *bound : default_bound(s.code);
  if (auto defect = structure_defect(s)) throw std::invalid_argument(*defect);
  return s;
}

CodedStructure encode_structure(const std::vector<std::string>& domain,
                                const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::map<std::string, Ordinal>& assign, std::optional<Ordinal> bound) {
  std::set<Ordinal> used;
  std::vector<Ordinal> elements;
  auto at = [&](const std::string& label) -> const Ordinal& {
    auto it = assign.find(label);
    if (it == assign.end()) throw std::invalid_argument("label '" + label + "' has no assigned ordinal");
    return it->second;
  };
  for (const std::string& label : domain) {
    if (!used.insert(at(label)).second) {
      throw std::invalid_argument("assignment is not injective at label '" + label + "'");
    }
    elements.push_back(at(label));
  }
  std::vector<Edge> coded;
  for (const auto& [a, b] : edges) {
    if (std::find(domain.begin(), domain.end(), a) == domain.end() ||
        std::find(domain.begin(), domain.end(), b) == domain.end()) {
      throw std::invalid_argument("edge (" + a + ", " + b + ") leaves the domain");
    }
    coded.emplace_back(at(a), at(b));
  }
  return structure_from_edges(std::move(elements), coded, std::move(bound));
}

std::set<Edge> decode_edges(const CodedStructure& s) {
  std::set<Edge> edges;
  for (const Ordinal& c : s.code) edges.insert(unpair(c));
  return edges;
}

std::optional<std::string> structure_defect(const CodedStructure& s) {
  if (!std::is_sorted(s.domain.begin(), s.domain.end()) ||
      std::adjacent_find(s.domain.begin(), s.domain.end()) != s.domain.end()) {
    return "domain is not a sorted list of distinct ordinals";
  }
  for (const Ordinal& c : s.code) {
    if (c >= s.bound) return "code member " + to_string(c) + " is not below the bound " + to_string(s.bound);
    auto [a, b] = unpair(c);
    for (const Ordinal& x : {a, b}) {
      if (!std::binary_search(s.domain.begin(), s.domain.end(), x)) {
        return "code member " + to_string(c) + " relates " + to_string(x) + ", which is outside the domain";
      }
    }
  }
  return std::nullopt;
}

std::size_t size_parameter(const CodedStructure& s) { return std::max(s.domain.size(), s.code.size()); }

bool eval(const Formula& phi, const CodedStructure& s, const Environment& env, CostMeter& meter) {
  for (const std::string& v : free_variables(phi)) lookup(env, v);
  Environment scratch = env;
  return evaluate(phi, s, scratch, meter);
}

std::vector<SentenceReport> check_fragment(const CodedStructure& s, const std::vector<FormulaPtr>& sentences) {
  std::vector<SentenceReport> reports;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!free_variables(*sentences[i]).empty()) {
      throw std::invalid_argument("sentence " + std::to_string(i) + " is not closed: " + to_string(*sentences[i]));
    }
    CostMeter meter;
    bool holds = eval(*sentences[i], s, {}, meter);
    reports.push_back(SentenceReport{i, holds, meter.basic_ops});
  }
  return reports;
}

std::map<Ordinal, Ordinal> wf_ranks(const CodedStructure& s) {
  std::map<Ordinal, std::vector<Ordinal>> predecessors;
  for (const auto& [a, b] : decode_edges(s)) predecessors[b].push_back(a);
  std::map<Ordinal, Ordinal> rank;
  // Peel off elements all of whose predecessors already have a rank.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Ordinal& x : s.domain) {
      if (rank.count(x)) continue;
      Ordinal r;
      bool ready = true;
      for (const Ordinal& y : predecessors[x]) {
        auto it = rank.find(y);
        if (it == rank.end()) {
          ready = false;
          break;
        }
        r = std::max(r, add(it->second, Ordinal(1)));
      }
      if (ready) {
        rank.emplace(x, r);
        changed = true;
      }
    }
  }
  return rank;
}

std::set<Ordinal> wf_part(const CodedStructure& s) {
  std::set<Ordinal> part;
  for (const auto& [x, r] : wf_ranks(s)) part.insert(x);
  return part;
}

Ordinal ordinal_height(const CodedStructure& s) {
  Ordinal h;
  for (const auto& [x, r] : wf_ranks(s)) h = std::max(h, add(r, Ordinal(1)));
  return h;
}

}  // namespace otm
