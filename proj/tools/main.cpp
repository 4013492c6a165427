// Copyright 2026 The hybridpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hybridpulse run <scenario> [--out DIR] [--threads N] [--check]

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hybridpulse/errors.hpp"
#include "hybridpulse/scenario.hpp"

namespace {

// 2: the scenario text is wrong, 3: a module refused the inputs,
// 4: artifacts could not be written.
int exit_code(hp::ErrorKind k) {
  switch (k) {
    case hp::ErrorKind::ParseError:
    case hp::ErrorKind::UnknownKey:
    case hp::ErrorKind::ValidationError:
      return 2;
    case hp::ErrorKind::Io:
      return 4;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse-gated hybrid qubit simulator"};
  app.require_subcommand(1);

  std::string file, out_dir = ".";
  int threads = 1;
  bool check_only = false;
  auto* run = app.add_subcommand("run", "Run a scenario file and write CSV artifacts");
  run->add_option("scenario", file, "Scenario file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::Range(1, 1024));
  run->add_flag("--check", check_only, "Parse and validate only");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    if (!in) throw hp::Error(hp::ErrorKind::Io, "cannot read " + file);
    const hp::Scenario s = hp::parse_scenario(buf.str());
    if (check_only) {
      std::cout << hp::serialize_scenario(s);
      return 0;
    }
    const hp::RunResult r = hp::run_scenario(s, {out_dir, threads});
    for (const auto& f : r.files) std::cout << f << '\n';
    return 0;
  } catch (const hp::Error& e) {
    std::cerr << "error[" << hp::to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error[Internal]: " << e.what() << '\n';
    return 3;
  }
}
