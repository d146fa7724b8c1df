#include <cstdio>
#include <fstream>

#include <CLI11.hpp>

#include "cli_app.hpp"
#include "runners.hpp"

int main(int argc, char** argv) {
  using namespace vacrad::cli;

  CLI::App app{"vacuum-radiation calculator and printed-equation auditor"};
  CliState state;
  attach_cli(app, state);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; every parse or flag problem is usage: 1.
    return app.exit(e) == 0 ? 0 : 1;
  }

  const RunOutcome outcome = run(state.config);
  if (!outcome.error.empty()) std::fprintf(stderr, "%s\n", outcome.error.c_str());

  if (!outcome.output.empty()) {
    if (state.config.output_path.empty()) {
      std::fwrite(outcome.output.data(), 1, outcome.output.size(), stdout);
    } else {
      std::ofstream file(state.config.output_path, std::ios::binary);
      file.write(outcome.output.data(),
                 static_cast<std::streamsize>(outcome.output.size()));
      if (!file) {
        std::fprintf(stderr, "cannot write output file: %s\n",
                     state.config.output_path.c_str());
        return 1;
      }
    }
  }
  return outcome.exit_code;
}
