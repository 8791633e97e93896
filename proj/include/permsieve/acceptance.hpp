#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace permsieve {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Failures plus a few observations worth printing (smallest n, counts).
  std::vector<std::string> notes;
};

struct AcceptanceOptions {
  /// Scratch directory for the determinism check; a fresh subdirectory is
  /// created inside and removed afterwards.
  std::filesystem::path scratch = std::filesystem::temp_directory_path();
  int workers = 2;
  /// Called once per criterion as soon as it finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// Runs one criterion (1..12).
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// "PASS  3  title" or "FAIL  3  title" followed by indented notes.
std::string format_result(const CriterionResult& r);

}  // namespace permsieve
