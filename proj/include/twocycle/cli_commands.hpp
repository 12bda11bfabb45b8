#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "twocycle/caps.hpp"
#include "twocycle/forms.hpp"
#include "twocycle/modules.hpp"

namespace twocycle {

// summary: human-readable report. machine: one JSON document, byte-stable
// across identical invocations. full: summary followed by the machine
// document.
enum class OutputStyle { Summary, Full, Machine };

inline constexpr int kExitPass = 0;          // command succeeded / all checks passed
inline constexpr int kExitMathFailure = 1;   // a checked statement is false (witness emitted)
inline constexpr int kExitInputError = 2;    // malformed invocation or input document
inline constexpr int kExitInconclusive = 3;  // an enumeration or time cap was hit

// One parsed invocation. Commands are callable in-process with a filled
// request; run_cli builds the request from argv.
struct CliRequest {
    std::string command;
    std::string graph_file;        // --graph: JSON graph document
    std::string catalog_name;      // --catalog: a built-in entry, or "all" for verify
    std::string form_file;         // --form: JSON form document
    std::string certificate_file;  // check-certificate input
    std::string theorem;           // verify: which statement to check
    std::string catalog_action;    // catalog: "list" or "run-all"
    SigmaMode mode = SigmaMode::Plain;
    std::vector<GeneratorFamily> families = {GeneratorFamily::CircuitPair,
                                             GeneratorFamily::Kuratowski,
                                             GeneratorFamily::Quad};
    std::uint64_t seed = 1;
    int trials = 25;
    CapConfig caps = CapConfig::from_environment();
    OutputStyle output = OutputStyle::Summary;
};

int cmd_rank(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_generators(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_decompose(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_verify(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_homology(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_crossing(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_check_certificate(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_catalog(const CliRequest& req, std::ostream& out, std::ostream& err);

// Parses argv, dispatches, maps errors to exit codes: caps hit -> 3,
// bad input -> 2, false statement -> 1.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twocycle
