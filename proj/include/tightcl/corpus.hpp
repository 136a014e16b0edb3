#pragma once

// Bundled example sessions with expected results, plus invariant sweeps
// over every ideal they declare.

#include <string>
#include <vector>

#include "tightcl/report.hpp"

namespace tc {

struct CorpusSession {
  std::string name;
  std::string text;
};

const std::vector<CorpusSession>& corpus_sessions();

/// Runs every fixture and invariant sweep. The result has "passed" plus one
/// entry per fixture and per invariant; fixture reports are embedded so the
/// whole document can be replayed.
Json corpus_run();

}  // namespace tc
