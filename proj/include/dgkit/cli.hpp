#pragma once

#include "dgkit/barcobar.hpp"
#include "dgkit/format.hpp"

namespace dgkit {

/// Bad command line or object kind; the CLI exits with code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandOptions {
    /// e.g. {"bar"} or {"twist", "enumerate"}.
    std::vector<std::string> command;
    /// Single-object commands: a preset name or a presentation file.
    std::string object;
    /// Two-object commands.
    std::string coalgebra;
    std::string algebra;
    /// Presentation file of kind map (twist verify, adjoint).
    std::string map;
    std::optional<std::string> field;
    std::optional<Truncation> trunc;
    SignConvention convention;
    bool strict_window = false;
    bool homology = false;
    bool pointed = false;
    /// Verbatim arguments, echoed at the top of the report.
    std::string echo;
};

struct ReportTable {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Plain text with a fixed layout: no timestamps, basis-ordered rows.
struct Report {
    std::string command;
    std::string convention;
    std::string field;
    std::string truncation;
    std::vector<Check> checks;
    std::vector<ReportTable> tables;
    std::vector<std::string> result;

    bool passed() const { return all_pass(checks); }
    std::string render() const;
};

std::vector<std::string> command_names();
Report dispatch(const CommandOptions& opt);

/// Exit codes.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace dgkit
