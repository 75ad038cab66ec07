#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <vector>

#include "etcons/metrics.hpp"
#include "report.hpp"

namespace etcons::cli {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZenoGuard:
      return kExitZeno;
    case ErrorKind::NumericalFailure:
    case ErrorKind::NonpositiveInternal:
      return kExitNumerical;
    default:
      return kExitConfig;
  }
}

namespace {

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

SimConfig load(const CommandOptions& opt) {
  return apply_overrides(load_config(opt.config), opt.overrides);
}

}  // namespace

int run_command(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig cfg = load(opt);
    try {
      const SimResult result = run(cfg);
      const RunReport rep = make_report(cfg, result);
      write_run_artifacts(opt.out_dir, rep);
      out << verdict(rep) << "\n";
      return static_cast<int>(kExitOk);
    } catch (const ZenoGuardError& e) {
      const RunReport rep = make_report(cfg, *e.partial(), true);
      write_run_artifacts(opt.out_dir, rep);
      out << verdict(rep) << "\n";
      throw;
    }
  });
}

int compare_command(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig base = load(opt);
    // Dynamic-only parameters are not validated under a static base law.
    for (LawKind law : kAllLaws) validate_params(base.params, law);

    std::vector<std::future<ComparisonRow>> jobs;
    for (LawKind law : kAllLaws) {
      jobs.push_back(std::async(std::launch::async, [&base, law] {
        SimConfig cfg = base;
        cfg.law = law;
        try {
          return ComparisonRow{law, run(cfg), "ok"};
        } catch (const ZenoGuardError& e) {
          return ComparisonRow{law, *e.partial(), "zeno-guard"};
        }
      }));
    }
    std::vector<ComparisonRow> rows;
    std::exception_ptr failure;
    for (auto& job : jobs) {
      try {
        rows.push_back(job.get());
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
    }

    std::filesystem::create_directories(opt.out_dir);
    std::ofstream csv(opt.out_dir / "comparison.csv");
    if (!csv) throw Error(ErrorKind::InvalidConfig, "InvalidConfig: cannot write comparison.csv");
    write_comparison(csv, base.x0.size(), rows);
    if (failure) std::rethrow_exception(failure);

    for (const ComparisonRow& row : rows) {
      out << law_name(row.law) << ": " << row.result.summary.total_events << " events, "
          << "final error " << format_double(row.result.summary.final_error) << " ("
          << row.status << ")\n";
    }
    const bool zeno = std::any_of(rows.begin(), rows.end(),
                                  [](const ComparisonRow& r) { return r.status != "ok"; });
    return static_cast<int>(zeno ? kExitZeno : kExitOk);
  });
}

int check_command(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig cfg = load(opt);
    const LaplacianMatrix l = laplacian(cfg.graph);
    const SpectralSummary s = spectral_summary(l);
    out << "ok: " << cfg.x0.size() << " agents, law " << law_name(cfg.law) << ", rho2 "
        << format_double(s.fiedler) << ", decay rate "
        << format_double(decay_rate(cfg.law, l, s, cfg.params)) << "\n";
    return static_cast<int>(kExitOk);
  });
}

}  // namespace etcons::cli
