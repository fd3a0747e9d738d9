#include "rcdb/adversary.hpp"

namespace rcdb {

CorruptResult corrupt(AttackState& state, int round, std::size_t a, std::size_t b,
                      int true_label, const EnvModel& env, Rng& rng) {
    if (state.used > state.budget)
        throw BudgetViolation("adversary exceeded its flip budget");

    bool flip = false;
    if (state.used < state.budget) {
        switch (state.kind) {
            case AttackKind::None:
                break;
            case AttackKind::Greedy:
                flip = round <= state.budget;
                break;
            case AttackKind::Random:
                flip = rng.uniform01() < state.p;
                break;
            case AttackKind::Adversarial: {
                // flip only labels that agree with the preference model;
                // a tie (prob exactly 1/2) is never flipped
                const double prob = true_preference_prob(env, a, b);
                flip = (prob > 0.5 && true_label == 1) || (prob < 0.5 && true_label == 0);
                break;
            }
            case AttackKind::Misleading:
                // keep the target arm winning whenever it appears
                if (a != b) {
                    flip = (state.target == a && true_label == 0) ||
                           (state.target == b && true_label == 1);
                }
                break;
        }
    }
    if (flip) {
        ++state.used;
        if (state.used > state.budget)
            throw BudgetViolation("adversary exceeded its flip budget");
        return {1 - true_label, 1};
    }
    return {true_label, 0};
}

}  // namespace rcdb
