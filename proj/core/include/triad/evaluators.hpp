// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "triad/vertexdb.hpp"

namespace triad {

/// Configuration-level description of an objective. Built-in names:
///
///   "linear"               f = x_1                              (r = 1)
///   "quadratic-offcenter"  f = sum_j (x_j - 1/3)^2              (r = 1)
///   "constant"             f = value                            (r = 1)
///   "subprocess"           spawn argv per evaluation: the point goes to the
///                          child's stdin as one line of floats, the child
///                          prints r floats on stdout             (r = arity)
struct EvaluatorSpec {
    std::string name = "quadratic-offcenter";
    double value = 1.0;             // "constant" only
    std::vector<std::string> argv;  // "subprocess" only
    int arity = 1;
};

/// Throws ConfigError for unknown names or invalid parameters.
Evaluator make_evaluator(const EvaluatorSpec& spec);

Evaluator make_linear();
Evaluator make_quadratic_offcenter();
Evaluator make_constant(double value);

/// Child-process objective. One process is spawned per evaluation; a
/// non-zero exit, missing output or non-numeric output raises EvalError.
/// SIGPIPE is ignored process-wide on first use so short-lived children
/// cannot kill the caller.
Evaluator make_subprocess(std::vector<std::string> argv, int arity);

const std::vector<std::string>& builtin_evaluator_names();

} // namespace triad
