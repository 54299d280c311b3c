#pragma once

#include <string>
#include <vector>

#include "k3fib/rational.hpp"

namespace k3fib {

// Knobs of the checking pipeline.  Defaults match the documented CLI
// defaults; the CLI maps its flags and the truncation environment override
// onto this struct.
struct PipelineConfig {
  enum class Format { text, json };

  int max_degree = 6;                       // graded checks run in 0..max
  std::vector<int> torsion_degrees = {2, 3, 4, 5};
  std::vector<Rational> samples = {Rational(-1), Rational(1, 2), Rational(2)};
  int truncation_cap = 12;                  // germ colength truncation bound
  Format format = Format::text;
  std::string out_path;                     // also write the report here
  bool inject_torsion_error = false;        // self-check hook: corrupt one
                                            // torsion expectation and let the
                                            // invariant guard trip
};

}  // namespace k3fib
