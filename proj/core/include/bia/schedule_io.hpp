// Copyright 2026 The bia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef BIA_SCHEDULE_IO_HPP_
#define BIA_SCHEDULE_IO_HPP_

// Canonical JSON form of a schedule:
//   {"K":3,"N":4,"lambda":[...],"offsets":[...],"period":16,
//    "tuples":[{"slots":[...],"start_group":2},...],"version":1}
// Keys are emitted sorted; all numbers are integers. A file may hold a
// single schedule object or an array of them.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bia/errors.hpp"
#include "bia/scheduler.hpp"

namespace bia {

inline constexpr int kScheduleFormatVersion = 1;

/// Malformed or inconsistent schedule document.
class ScheduleFormatError : public InputError {
 public:
  using InputError::InputError;
};

std::string schedule_to_json(const Schedule& sched, int indent = 2);
std::string schedules_to_json(std::span<const Schedule> scheds, int indent = 2);

/// Accepts one schedule object or an array of them.
std::vector<Schedule> schedules_from_json(std::string_view text);
/// Throws ScheduleFormatError unless the document holds exactly one schedule.
Schedule schedule_from_json(std::string_view text);

}  // namespace bia

#endif  // BIA_SCHEDULE_IO_HPP_
