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

#pragma once

#include <ostream>

namespace edcnl::cli
{
  enum ExitStatus : int
  {
    Success = 0,
    UsageError = 1,
    Diagnostics = 2,
    Discrepancy = 3,
    MonitorFailure = 4,
  };

  /// Runs the `edcnl` command line.  Payload goes to `out`, messages to
  /// `err`; the return value is an ExitStatus.
  int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
}
