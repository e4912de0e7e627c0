/*
 * Copyright 2026 The photonic-dse Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pdse/event_queue.hpp"

#include "pdse/errors.hpp"

namespace pdse {

void EventQueue::push(double time_s, EventKind kind, std::size_t layer, std::int64_t round) {
  heap_.push(Event{time_s, next_seq_++, kind, layer, round});
}

Event EventQueue::pop() {
  if (heap_.empty()) throw InvariantViolation("pop from an empty event queue");
  Event e = heap_.top();
  heap_.pop();
  return e;
}

}  // namespace pdse
