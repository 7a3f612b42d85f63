#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlab::cli {

enum ExitCode : int {
    ok = 0,
    // invalid labeling, nonexistent sequence, search exhausted without a result
    negative = 1,
    usage = 2,
    // a search ran out of budget; the answer is unknown
    budget = 3,
};

// args excludes the program name. Graph or labeling files given as "-" are read
// from in.
int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err);

}
