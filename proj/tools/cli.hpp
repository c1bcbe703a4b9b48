#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace gibbsflow::cli {

// Fully resolved key=value settings, defaults materialized.
using Settings = std::map<std::string, std::string>;

// Parses "key = value" lines; '#' starts a comment.
Settings parse_config_text(const std::string& text);

// Runs one command. Returns the exit status; errors go to err as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gibbsflow::cli
