// src/lr_schedule.cc

// Copyright 2024  The btforge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "btforge/lr_schedule.h"

#include <cmath>

#include "btforge/line_io.h"

namespace btforge {

Schedule RescaleSchedule(const ScheduleSpec &spec) {
  if (spec.base_epochs < 1 || spec.multiplier < 1 ||
      spec.base_decay_start_epoch < 1 ||
      spec.base_decay_start_epoch > spec.base_epochs ||
      !(spec.base_decay_factor > 0.0) || !(spec.base_decay_factor < 1.0))
    throw DataError("invalid schedule spec");

  const int k = spec.multiplier;
  Schedule out;
  out.decay_start_epoch = (spec.base_decay_start_epoch - 1) * k + 1;
  out.decay_factor = std::pow(spec.base_decay_factor, 1.0 / k);

  const int epochs = spec.base_epochs * k;
  out.epoch_multipliers.reserve(epochs);
  for (int e = 1; e <= epochs; ++e) {
    if (e < out.decay_start_epoch) {
      out.epoch_multipliers.push_back(1.0);
    } else {
      // base^(steps/k) rather than powers of the rounded k-th root, so
      // every k-th epoch lands on an exact power of the base factor.
      int steps = e - out.decay_start_epoch + 1;
      out.epoch_multipliers.push_back(
          std::pow(spec.base_decay_factor, static_cast<double>(steps) / k));
    }
  }
  return out;
}

}  // namespace btforge
