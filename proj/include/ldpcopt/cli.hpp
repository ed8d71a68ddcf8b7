#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ldpcopt/json_io.hpp"

namespace ldpcopt {

enum class Command { Optimize, Verify, Threshold, Table, Examples };
enum class DegreeConvention { PolyDegree, NodeDegree };
enum class OutputFormat { Json, Text, Csv };

const char* to_string(Command c);
const char* to_string(DegreeConvention c);
const char* to_string(OutputFormat f);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::Optimize;
    std::string mode = "max-threshold";
    std::string rho_spec;
    std::string lambda_spec;
    int dv_max = 0;
    int dc_max = 0;
    std::optional<Scalar> epsilon;
    int grid = 0;  // > 0 selects the grid-LP baseline
    Scalar gap_tol = 1e-8;
    Scalar feas_tol = 1e-8;
    int max_iter = 200;
    std::string out_path;    // empty writes to stdout
    std::string input_path;  // verify input
    OutputFormat format = OutputFormat::Text;
    bool emit_curves = false;
    DegreeConvention convention = DegreeConvention::PolyDegree;
    std::string columns;  // table column filter, comma separated; "all" default
};

json run_config_to_json(const RunConfig& c);
RunConfig run_config_from_json(const json& j);

// Builds the DesignProblem a RunConfig describes. Throws ConfigError on
// invalid combinations (missing epsilon, missing polynomial, ...).
DesignProblem problem_from_config(const RunConfig& c);

// Executes the configured command. Returns 0 on success, 1 on solver or
// verification failure. Configuration errors throw ConfigError (exit 2).
int run_command(const RunConfig& c, std::ostream& out, std::ostream& err);

}  // namespace ldpcopt
