#pragma once

#include "ltd/config.hpp"
#include "ltd/dataset.hpp"
#include "ltd/reliability.hpp"

namespace ltd {

struct TrainResult {
    RbmParameters rbm;
    ReliabilityModel model;
    std::size_t epochs = 0;
    bool converged = false;
};

// Contrastive-divergence training (one Gibbs step per update) over
// minibatches of facts. Each fact activates only its claiming sources:
// absent sources receive no visible update and contribute no hidden-bias
// share. Stops once the largest parameter change in an epoch falls below
// cfg.convergence_tolerance, or after cfg.max_epochs.
TrainResult train(const Dataset& d, const RunConfig& cfg);

// Categorical variant: the hidden state is sampled per attribute from the
// softmax-normalized plausibilities of its values (exactly one value's
// hidden unit set), instead of independently per fact. Minibatches are
// whole attributes, packed until the fact budget (minibatch_size) is met.
TrainResult train_categorical(const Dataset& d, const RunConfig& cfg);

} // namespace ltd
