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

#include "bia/schedule_io.hpp"

#include <cstdint>

#include "json.hpp"

namespace bia {
namespace {

using nlohmann::json;

json to_document(const Schedule& sched) {
  json tuples = json::array();
  for (const SuperSymbol& sym : sched.tuples) {
    tuples.push_back({{"start_group", sym.start_group}, {"slots", sym.slots}});
  }
  const auto offsets = sched.config.offsets();
  return {
      {"version", kScheduleFormatVersion},
      {"N", sched.config.coherence()},
      {"K", sched.config.users()},
      {"offsets", std::vector<std::int64_t>(offsets.begin(), offsets.end())},
      {"period", sched.period()},
      {"lambda", sched.lambda},
      {"tuples", std::move(tuples)},
  };
}

const json& field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ScheduleFormatError(std::string("schedule is missing field '") + key + "'");
  }
  return *it;
}

std::int64_t integer(const json& v, const char* what) {
  if (!v.is_number_integer()) {
    throw ScheduleFormatError(std::string(what) + " must be an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> integers(const json& v, const char* what) {
  if (!v.is_array()) throw ScheduleFormatError(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(integer(e, what));
  return out;
}

Schedule from_document(const json& doc) {
  if (!doc.is_object()) throw ScheduleFormatError("schedule must be a JSON object");
  const std::int64_t version = integer(field(doc, "version"), "version");
  if (version != kScheduleFormatVersion) {
    throw ScheduleFormatError("unsupported schedule version " + std::to_string(version));
  }
  const std::int64_t n = integer(field(doc, "N"), "N");
  const std::int64_t k = integer(field(doc, "K"), "K");
  std::vector<std::int64_t> offsets = integers(field(doc, "offsets"), "offsets");
  if (n < 1 || k < 2 || static_cast<std::int64_t>(offsets.size()) != k) {
    throw ScheduleFormatError("inconsistent N, K and offsets");
  }
  for (std::int64_t o : offsets) {
    if (o < 0 || o >= n) throw ScheduleFormatError("offsets must lie in [0, N)");
  }
  if (integer(field(doc, "period"), "period") != (k + 1) * n) {
    throw ScheduleFormatError("period must equal (K+1)*N");
  }
  std::vector<std::int64_t> lambda = integers(field(doc, "lambda"), "lambda");
  if (static_cast<std::int64_t>(lambda.size()) != k * (k + 1)) {
    throw ScheduleFormatError("lambda must have K(K+1) entries");
  }
  const json& tuples = field(doc, "tuples");
  if (!tuples.is_array()) throw ScheduleFormatError("tuples must be an array");

  Schedule sched{.config = ChannelConfig(n, std::move(offsets)),
                 .lambda = std::move(lambda),
                 .tuples = {}};
  for (const json& t : tuples) {
    if (!t.is_object()) throw ScheduleFormatError("each tuple must be an object");
    sched.tuples.push_back(
        {.start_group = integer(field(t, "start_group"), "start_group"),
         .slots = integers(field(t, "slots"), "slots")});
  }
  return sched;
}

}  // namespace

std::string schedule_to_json(const Schedule& sched, int indent) {
  return to_document(sched).dump(indent);
}

std::string schedules_to_json(std::span<const Schedule> scheds, int indent) {
  json arr = json::array();
  for (const Schedule& s : scheds) arr.push_back(to_document(s));
  return arr.dump(indent);
}

std::vector<Schedule> schedules_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScheduleFormatError(std::string("not valid JSON: ") + e.what());
  }
  std::vector<Schedule> out;
  if (doc.is_array()) {
    if (doc.empty()) throw ScheduleFormatError("schedule array is empty");
    for (const json& d : doc) out.push_back(from_document(d));
  } else {
    out.push_back(from_document(doc));
  }
  return out;
}

Schedule schedule_from_json(std::string_view text) {
  auto all = schedules_from_json(text);
  if (all.size() != 1) {
    throw ScheduleFormatError("expected a single schedule, found " +
                              std::to_string(all.size()));
  }
  return std::move(all.front());
}

}  // namespace bia
