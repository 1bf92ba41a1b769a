#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace elimtree::cli {

// Process exit codes.
enum Exit : int {
  kOk = 0,            // success, or YES for distance
  kNo = 1,            // NO verdict / replay mismatch
  kInvalidTree = 2,   // tree fails to parse or validate, bad rotation
  kDisconnected = 3,  // graph is not connected
  kCapExceeded = 4,   // enumeration or BFS cap exceeded
  kUsage = 5,         // bad arguments or unreadable graph file
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elimtree::cli
