// Copyright 2026 The edcnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Formula evaluation over lassos of at most 64 positions, one bit per
// position.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edcnl/ltl.hpp"

namespace edcnl::ltl::detail
{
  struct Instr
  {
    Op op;
    int a;
    int b;
    int atom;
  };

  /// Post-order code; the root is the last instruction.
  struct Program
  {
    std::vector<Instr> code;
  };

  /// Atoms are looked up by their rendered text.
  Program compile(const Formula& f, const std::map<std::string, int>& atom_index);

  /// `atoms[k]` holds the positions where atom k is true.  Returns the value
  /// at position 0.  `scratch` is reused between calls.
  bool run(const Program& prog, const std::uint64_t* atoms, int prefix, int length,
           std::vector<std::uint64_t>& scratch);
}
