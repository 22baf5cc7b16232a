#pragma once

// Dispositional virtues and the eudaimonic learning rule.
//
// Each virtue is a scalar weight on the deficiency..excess axis [-1, +1] that
// gates one binary choice: acting (tell the truth, attempt a rescue, give
// food) is the excess branch, withholding is the deficiency branch. Weights
// move under phronetic learning: the taken branch is reinforced when the
// agent's cumulative e-value rose and punished when it fell.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace bridgeworld {

enum class VirtueKind { Courage, Generosity, Honesty };

enum class Branch { Excess, Deficiency };

// Goal conceptions driving reward evaluation. None marks the no-learning
// baseline: such agents never accrue e-value and never learn.
enum class EType { None, Selfish, PraiseBlame, SelfishSelfless };

// The six response actions. Each interaction type touches exactly one virtue:
// food location -> Honesty, drowning -> Courage, food sharing -> Generosity.
enum class EventKind {
  ToldTruth,
  Lied,
  AttemptedRescue,
  IgnoredRescueCall,
  GaveFood,
  IgnoredBeggar,
};

struct Character {
  double courage = 0.0;
  double generosity = 0.0;
  double honesty = 0.0;

  double& weight(VirtueKind kind) {
    switch (kind) {
      case VirtueKind::Courage: return courage;
      case VirtueKind::Generosity: return generosity;
      default: return honesty;
    }
  }
  double weight(VirtueKind kind) const {
    return const_cast<Character*>(this)->weight(kind);
  }

  friend bool operator==(const Character&, const Character&) = default;
};

constexpr VirtueKind virtue_of(EventKind kind) {
  switch (kind) {
    case EventKind::ToldTruth:
    case EventKind::Lied: return VirtueKind::Honesty;
    case EventKind::AttemptedRescue:
    case EventKind::IgnoredRescueCall: return VirtueKind::Courage;
    default: return VirtueKind::Generosity;
  }
}

constexpr Branch branch_of(EventKind kind) {
  switch (kind) {
    case EventKind::ToldTruth:
    case EventKind::AttemptedRescue:
    case EventKind::GaveFood: return Branch::Excess;
    default: return Branch::Deficiency;
  }
}

// Scalars a reward rule may need beyond the event kind: the stream level for
// rescue events, the responder's pre-transfer reserve (and the reserve cap
// fixing the cheap/costly midpoint) for sharing events.
struct EventContext {
  double stream_level = 0.0;
  double responder_reserve = 0.0;
  double reserve_cap = 0.0;

  friend bool operator==(const EventContext&, const EventContext&) = default;
};

struct MoralEvent {
  EventKind kind;
  double magnitude = 1.0;  // StreamLevel for rescue events, 1.0 otherwise
  EventContext context;

  friend bool operator==(const MoralEvent&, const MoralEvent&) = default;
};

struct LearnConfig {
  double learning_rate = 0.1;
  bool scale_by_magnitude = false;

  friend bool operator==(const LearnConfig&, const LearnConfig&) = default;
};

// Threshold decision: excess requires the weight strictly above the
// threshold; ties take the deficiency branch. One rule used everywhere.
inline Branch decide_excess(double weight, double threshold) {
  return weight > threshold ? Branch::Excess : Branch::Deficiency;
}

// One phronetic update. The step is LR (times |magnitude| when configured);
// e_delta > 0 moves the named weight toward the taken branch, e_delta < 0
// away from it, e_delta == 0 leaves the character untouched. The result is
// clamped to [-1, +1] and no other weight changes.
inline Character learn(Character character, VirtueKind virtue, Branch branch,
                       double e_delta, const LearnConfig& cfg,
                       double magnitude = 1.0) {
  if (e_delta == 0.0) return character;
  const double step =
      cfg.learning_rate * (cfg.scale_by_magnitude ? std::abs(magnitude) : 1.0);
  double direction = (branch == Branch::Excess) ? 1.0 : -1.0;
  if (e_delta < 0.0) direction = -direction;
  double& w = character.weight(virtue);
  w = std::clamp(w + direction * step, -1.0, 1.0);
  return character;
}

// Signed unit e-value change for one responded event under the given goal
// conception. Selfish rewards self-preservation and is neutral to the food
// location question; praise/blame rewards every cooperative response and
// blames every withheld one; selfish/selfless rewards altruism when cheap
// (stream level <= 0, reserve above half the cap) and self-preservation when
// costly, and rewards truthfulness unconditionally.
inline double eudaimonic_delta(EType etype, const MoralEvent& event) {
  switch (etype) {
    case EType::None:
      throw std::invalid_argument("eudaimonic_delta: EType::None never evaluates events");
    case EType::Selfish:
      switch (event.kind) {
        case EventKind::AttemptedRescue:
        case EventKind::GaveFood: return -1.0;
        case EventKind::IgnoredRescueCall:
        case EventKind::IgnoredBeggar: return +1.0;
        default: return 0.0;  // telling or lying costs the responder nothing
      }
    case EType::PraiseBlame:
      return branch_of(event.kind) == Branch::Excess ? +1.0 : -1.0;
    case EType::SelfishSelfless: {
      switch (event.kind) {
        case EventKind::ToldTruth: return +1.0;
        case EventKind::Lied: return -1.0;
        case EventKind::AttemptedRescue:
          return event.context.stream_level <= 0.0 ? +1.0 : -1.0;
        case EventKind::IgnoredRescueCall:
          return event.context.stream_level <= 0.0 ? -1.0 : +1.0;
        case EventKind::GaveFood:
          return event.context.responder_reserve > event.context.reserve_cap / 2.0
                     ? +1.0
                     : -1.0;
        default:  // IgnoredBeggar
          return event.context.responder_reserve > event.context.reserve_cap / 2.0
                     ? -1.0
                     : +1.0;
      }
    }
  }
  throw std::invalid_argument("eudaimonic_delta: unknown e-type");
}

// What one agent exposes to would-be imitators.
struct ExemplarSnapshot {
  EType etype = EType::None;
  double e_value = 0.0;
  Character character;
};

// Exemplar adoption: the snapshot's full character is copied iff the e-types
// match and the exemplar's cumulative e-value is strictly higher. The
// adopter's own e-value is never copied.
inline std::optional<Character> adopt_exemplar(EType etype, double e_value,
                                               const ExemplarSnapshot& exemplar) {
  if (etype == exemplar.etype && exemplar.e_value > e_value) {
    return exemplar.character;
  }
  return std::nullopt;
}

}  // namespace bridgeworld
