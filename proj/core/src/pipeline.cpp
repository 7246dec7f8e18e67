#include "s5/pipeline.hpp"

#include "s5/normalizer.hpp"

namespace s5 {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
auto timed(std::chrono::duration<double>& into, F&& work) {
  const auto start = Clock::now();
  auto result = work();
  into = Clock::now() - start;
  return result;
}

}  // namespace

PipelineResult run_pipeline(const Formula& f, const PipelineOptions& options) {
  PipelineResult r;
  r.normal_form = timed(r.timings.normalize, [&] { return normalize(f); });

  r.instance = timed(r.timings.encode, [&] {
    const auto& e = options.encoding.enrichments;
    if (options.encoding.kind == EncodingKind::he && e.any()) {
      throw std::invalid_argument("enrichments need the full or reach encoding");
    }
    EncodingOptions base{options.encoding.kind, {}};
    base.enrichments.diamonds = e.diamonds;
    CnfInstance c = encode(r.normal_form, base);
    r.stages.push_back({describe(base.kind, base.enrichments), c.stats()});
    if (e.conflicts) {
      c = apply_conflicts(c, r.normal_form);
      r.stages.push_back({"+conflicts", c.stats()});
    }
    if (e.boxes) {
      c = apply_boxes(c, r.normal_form);
      r.stages.push_back({"+boxes", c.stats()});
    }
    return c;
  });

  const Outcome outcome = timed(r.timings.solve, [&] {
    return options.external ? solve_external(*options.external, r.instance) : solve(r.instance, options.solve);
  });
  r.status = outcome.status;
  r.solver_stats = outcome.stats;

  if (outcome.sat()) {
    r.model = timed(r.timings.extract, [&] { return extract_model(outcome.model, r.instance); });
    if (options.verify) r.verified = verify(f, *r.model);
  }
  return r;
}

}  // namespace s5
