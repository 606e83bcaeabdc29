// Copyright 2026 The Tchouk Authors
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

#ifndef TCHOUK_TCHOUK_HPP
#define TCHOUK_TCHOUK_HPP

#include "tchouk/board.hpp"
#include "tchouk/crt.hpp"
#include "tchouk/graph.hpp"
#include "tchouk/length.hpp"
#include "tchouk/sieve.hpp"
#include "tchouk/stone_count.hpp"

#endif  // TCHOUK_TCHOUK_HPP
