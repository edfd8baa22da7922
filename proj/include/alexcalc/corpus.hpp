#pragma once

// Bundled worked examples with known answers. Each entry carries its input
// data next to the check, so callers may perturb the data and re-evaluate.

#include <functional>
#include <string>
#include <vector>

#include "alexcalc/laurent.hpp"
#include "alexcalc/seifert.hpp"

namespace alexcalc {

struct NamedPair {
  std::string label;
  SeifertPair pair;
};

struct CorpusResult {
  bool passed = false;
  std::string detail;
};

struct CorpusEntry {
  std::string id;
  std::string description;
  std::vector<NamedPair> pairs;
  std::vector<LaurentPoly> polynomials;
  std::function<CorpusResult(const CorpusEntry&)> check;

  /// Runs the check; library errors count as failures.
  CorpusResult evaluate() const;
};

struct CorpusReport {
  struct Line {
    std::string id;
    std::string description;
    CorpusResult result;
  };
  std::vector<Line> lines;

  bool all_passed() const;
};

std::vector<CorpusEntry> bundled_corpus();

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries);
CorpusReport run_corpus();

}  // namespace alexcalc
