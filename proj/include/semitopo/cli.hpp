// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semitopo::cli
{

// Exit codes: a successful query with a positive verdict, a negative verdict
// (not open, not intertwined, discontinuous, deadlock or fork present), and
// usage / IO / validation errors.
enum ExitCode : int
{
    kOk = 0,
    kNegative = 1,
    kError = 2,
};

// args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);
}
