// Formula to verdict: normalise, encode, solve, extract and check a model.
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "s5/encoder.hpp"
#include "s5/external_solver.hpp"
#include "s5/formula.hpp"
#include "s5/kripke.hpp"
#include "s5/s5nf.hpp"
#include "s5/solver.hpp"

namespace s5 {

struct PipelineOptions {
  EncodingOptions encoding;
  SolveOptions solve;
  /// Solve with this subprocess instead of the embedded solver.
  std::optional<ExternalSolver> external;
  /// Evaluate the input formula on the extracted model.
  bool verify = true;
};

/// Size of the instance after one construction step ("reach",
/// "+conflicts", ...).
struct EncodingStage {
  std::string label;
  CnfStats stats;
};

struct PipelineTimings {
  std::chrono::duration<double> normalize{};
  std::chrono::duration<double> encode{};
  std::chrono::duration<double> solve{};
  std::chrono::duration<double> extract{};
};

struct PipelineResult {
  SolveStatus status = SolveStatus::unsat;
  S5NF normal_form;
  CnfInstance instance;
  std::vector<EncodingStage> stages;
  SolverStats solver_stats;
  std::optional<KripkeModel> model;  // set when sat
  std::optional<bool> verified;      // set when sat and options.verify
  PipelineTimings timings;
};

PipelineResult run_pipeline(const Formula& f, const PipelineOptions& options = {});

}  // namespace s5
