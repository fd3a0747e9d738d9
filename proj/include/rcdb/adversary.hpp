#pragma once

#include <cstddef>

#include "rcdb/environment.hpp"
#include "rcdb/rng.hpp"

namespace rcdb {

enum class AttackKind { None, Greedy, Random, Adversarial, Misleading };

// Budgeted label-flipping adversary. Budget is consumed only by actual
// flips; once used == budget every kind passes labels through.
struct AttackState {
    AttackKind kind = AttackKind::None;
    int budget = 0;
    int used = 0;
    double p = 0.5;          // random kind
    std::size_t target = 0;  // misleading kind; must be a non-optimal action
};

struct CorruptResult {
    int observed;  // label handed to the agent
    int flipped;   // 1 iff the adversary spent budget this round
};

// round is 1-based. true_label == 1 means action a won.
CorruptResult corrupt(AttackState& state, int round, std::size_t a, std::size_t b,
                      int true_label, const EnvModel& env, Rng& rng);

}  // namespace rcdb
