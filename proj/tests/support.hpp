/* Copyright 2026 The dumont-grammar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Shared test helpers: oracles, golden files and doctest printing.

#pragma once

#include <doctest.h>

#include "oracle.hpp"

namespace doctest {
template <>
struct StringMaker<dumont::Polynomial> {
  static String convert(const dumont::Polynomial& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
