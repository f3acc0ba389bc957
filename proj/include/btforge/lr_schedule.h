// include/btforge/lr_schedule.h

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

#ifndef BTFORGE_LR_SCHEDULE_H_
#define BTFORGE_LR_SCHEDULE_H_

#include <vector>

namespace btforge {

// Step-decay schedule stretched for a corpus grown by an integer
// factor k: the decay starts k times as many epochs in (counted in
// data passes it is unchanged) and each step is the k-th root of the
// base factor, so the decay per unit of data is preserved.
struct ScheduleSpec {
  int base_epochs = 13;
  int base_decay_start_epoch = 8;
  double base_decay_factor = 0.5;
  int multiplier = 1;
};

struct Schedule {
  int decay_start_epoch = 0;
  double decay_factor = 1.0;
  // Cumulative learning-rate multiplier for epochs 1..base_epochs*k.
  std::vector<double> epoch_multipliers;
};

// Invalid spec (factor outside (0,1), k < 1, decay start after the
// last epoch) is an error.
Schedule RescaleSchedule(const ScheduleSpec &spec);

}  // namespace btforge

#endif  // BTFORGE_LR_SCHEDULE_H_
