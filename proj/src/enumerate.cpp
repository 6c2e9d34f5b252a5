#include "ldiip/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ldiip {

namespace {

long long checked_mul(long long a, long long b) {
  if (a != 0 && b > (1LL << 62) / a) throw std::runtime_error("model space too large");
  return a * b;
}

}  // namespace

EnumSpec make_enum_spec(const Formula& f, const AgentUniverse& universe, int max_states,
                        ClosureStrategy strategy) {
  EnumSpec spec;
  spec.agents = universe.agents();
  spec.strategy = strategy;
  spec.max_states = max_states;
  spec.signature = modal_signature(f);

  std::set<MessageTerm> msgs;
  std::map<std::string, std::set<MessageTerm>> watched;
  for (const auto& [m, a] : spec.signature) {
    msgs.insert(m);
    watched[a].insert(m);
  }
  for (const auto& [a, m] : knowledge_atoms(f)) {
    msgs.insert(m);
    watched[a].insert(m);
  }
  std::set<MessageTerm> universe_set;
  for (const auto& m : msgs) m.collect_subterms(universe_set);
  for (const auto& a : spec.agents) universe_set.insert(MessageTerm::atom(a));
  spec.msg_universe.assign(universe_set.begin(), universe_set.end());
  for (const auto& [a, w] : watched) spec.watched[a].assign(w.begin(), w.end());
  for (const auto& p : prop_names(f)) spec.props.push_back(p);
  return spec;
}

ModelEnumerator::ModelEnumerator(EnumSpec spec) : spec_(std::move(spec)) {
  for (const auto& [m, a] : spec_.signature) {
    auto& w = spec_.watched[a];
    if (std::find(w.begin(), w.end(), m) == w.end()) {
      w.push_back(m);
      std::sort(w.begin(), w.end());
    }
  }
  if (spec_.msg_universe.size() > 16)
    throw std::runtime_error("base universe too large to enumerate");
  for (const auto& agent : spec_.agents) {
    const auto& watched = spec_.watched[agent];  // may be empty
    std::vector<BaseClass>& classes = classes_[agent];
    std::set<std::vector<bool>> seen;
    for (unsigned long mask = 0; mask < (1UL << spec_.msg_universe.size()); ++mask) {
      DataBase base;
      for (std::size_t i = 0; i < spec_.msg_universe.size(); ++i)
        if (mask & (1UL << i)) base.insert(spec_.msg_universe[i]);
      std::vector<bool> knows;
      for (const auto& m : watched)
        knows.push_back(derivable(agent, base, m, spec_.strategy));
      if (seen.insert(knows).second)
        classes.push_back(BaseClass{std::move(base), std::move(knows)});
    }
  }
}

long long ModelEnumerator::assignments_for(int n) const {
  long long total = 1;
  for (const auto& [agent, classes] : classes_)
    for (int s = 0; s < n; ++s)
      total = checked_mul(total, static_cast<long long>(classes.size()));
  return total;
}

void ModelEnumerator::decode_assignment(int n, long long index,
                                        std::vector<int>& digits) const {
  digits.assign(classes_.size() * static_cast<std::size_t>(n), 0);
  std::size_t pos = digits.size();
  for (auto it = classes_.rbegin(); it != classes_.rend(); ++it)
    for (int s = n - 1; s >= 0; --s) {
      long long radix = static_cast<long long>(it->second.size());
      digits[--pos] = static_cast<int>(index % radix);
      index /= radix;
    }
}

namespace {

struct Slot {
  ModalKey key;
  int state;
  std::vector<int> choices;  // singleton when forced
};

}  // namespace

// Shared core of walk/count: lays out bases and the admissible transitions.
// Returns false if this assignment admits no interface-valid model.
static bool layout(const EnumSpec& spec,
                   const std::map<std::string, std::vector<std::vector<bool>>>& knows,
                   int n, std::vector<Slot>& slots) {
  for (const auto& key : spec.signature) {
    const auto& [msg, agent] = key;
    const auto& w = spec.watched.at(agent);
    std::size_t wi = static_cast<std::size_t>(
        std::find(w.begin(), w.end(), msg) - w.begin());
    const auto& kn = knows.at(agent);
    std::vector<int> holders;
    for (int t = 0; t < n; ++t)
      if (kn[static_cast<std::size_t>(t)][wi]) holders.push_back(t);
    for (int s = 0; s < n; ++s) {
      Slot slot{key, s, {}};
      if (kn[static_cast<std::size_t>(s)][wi])
        slot.choices = {s};  // conditional reflexivity forces the loop
      else
        slot.choices = holders;  // epistemic image restricts to knowing states
      if (slot.choices.empty()) return false;  // seriality unachievable
      slots.push_back(std::move(slot));
    }
  }
  return true;
}

bool ModelEnumerator::walk_assignment(int n, const std::vector<int>& digits,
                                      const std::function<bool(const FiniteModel&)>& visit)
    const {
  FiniteModel model;
  model.num_states = n;
  model.strategy = spec_.strategy;
  model.default_names();

  std::map<std::string, std::vector<std::vector<bool>>> knows;
  std::size_t pos = 0;
  for (const auto& [agent, classes] : classes_) {
    auto& bases = model.bases[agent];
    for (int s = 0; s < n; ++s) {
      int c = digits[pos++];
      bases.push_back(classes[static_cast<std::size_t>(c)].base);
      knows[agent].push_back(classes[static_cast<std::size_t>(c)].knows_watched);
    }
  }

  std::vector<Slot> slots;
  if (!layout(spec_, knows, n, slots)) return true;

  for (const auto& p : spec_.props)
    model.prop_val[p].assign(static_cast<std::size_t>(n), false);

  std::vector<std::size_t> trans_idx(slots.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      model.trans[slots[i].key].assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < slots.size(); ++i)
      model.trans[slots[i].key][static_cast<std::size_t>(slots[i].state)] = {
          slots[i].choices[trans_idx[i]]};

    long long prop_bits = static_cast<long long>(spec_.props.size()) * n;
    if (prop_bits > 24) throw std::runtime_error("valuation space too large");
    for (long long mask = 0; mask < (1LL << prop_bits); ++mask) {
      for (std::size_t p = 0; p < spec_.props.size(); ++p)
        for (int s = 0; s < n; ++s)
          model.prop_val[spec_.props[p]][static_cast<std::size_t>(s)] =
              (mask >> (static_cast<long long>(p) * n + s)) & 1;
      if (!visit(model)) return false;
    }

    // next transition combination, last slot fastest
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++trans_idx[i] < slots[i].choices.size()) break;
      trans_idx[i] = 0;
      if (i == 0) return true;
    }
    if (slots.empty()) return true;
  }
}

long long ModelEnumerator::models_in_assignment(int n, const std::vector<int>& digits) const {
  std::map<std::string, std::vector<std::vector<bool>>> knows;
  std::size_t pos = 0;
  for (const auto& [agent, classes] : classes_) {
    for (int s = 0; s < n; ++s)
      knows[agent].push_back(classes[static_cast<std::size_t>(digits[pos++])].knows_watched);
  }
  std::vector<Slot> slots;
  if (!layout(spec_, knows, n, slots)) return 0;
  long long total = 1;
  for (const auto& slot : slots)
    total = checked_mul(total, static_cast<long long>(slot.choices.size()));
  for (long long b = static_cast<long long>(spec_.props.size()) * n; b > 0; --b)
    total = checked_mul(total, 2);
  return total;
}

void ModelEnumerator::for_each(const std::function<bool(const FiniteModel&)>& visit) const {
  std::vector<int> digits;
  for (int n = 1; n <= spec_.max_states; ++n) {
    long long total = assignments_for(n);
    for (long long ai = 0; ai < total; ++ai) {
      decode_assignment(n, ai, digits);
      if (!walk_assignment(n, digits, visit)) return;
    }
  }
}

long long ModelEnumerator::count_models() const {
  long long count = 0;
  std::vector<int> digits;
  for (int n = 1; n <= spec_.max_states; ++n) {
    long long total = assignments_for(n);
    for (long long ai = 0; ai < total; ++ai) {
      decode_assignment(n, ai, digits);
      count += models_in_assignment(n, digits);
    }
  }
  return count;
}

std::optional<FiniteModel> ModelEnumerator::find_first(
    const std::function<bool(const FiniteModel&)>& pred, bool parallel) const {
#ifndef _OPENMP
  (void)parallel;
#else
  if (parallel) {
    for (int n = 1; n <= spec_.max_states; ++n) {
      long long total = assignments_for(n);
      long long best_ai = total;
      std::optional<FiniteModel> best;
#pragma omp parallel
      {
        std::vector<int> digits;
#pragma omp for schedule(dynamic, 16)
        for (long long ai = 0; ai < total; ++ai) {
          long long cutoff;
#pragma omp atomic read
          cutoff = best_ai;
          if (ai >= cutoff) continue;
          decode_assignment(n, ai, digits);
          std::optional<FiniteModel> local;
          walk_assignment(n, digits, [&](const FiniteModel& m) {
            if (!pred(m)) return true;
            local = m;
            return false;  // first hit in an assignment is order-minimal there
          });
          if (local) {
#pragma omp critical(ldiip_find_first)
            if (ai < best_ai) {
              best_ai = ai;
              best = std::move(local);
            }
          }
        }
      }
      if (best) return best;
    }
    return std::nullopt;
  }
#endif
  std::optional<FiniteModel> found;
  for_each([&](const FiniteModel& m) {
    if (!pred(m)) return true;
    found = m;
    return false;
  });
  return found;
}

}  // namespace ldiip
