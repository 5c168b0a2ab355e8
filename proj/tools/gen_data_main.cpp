// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0
//
// Regenerates the bundled synthetic dataset. The committed file under data/
// is this tool's output with the default arguments.

#include <cstdio>

#include "CLI11.hpp"

#include "mcq/dataset.hpp"
#include "mcq/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bundled synthetic dataset generator"};
  std::string out = "data/synthetic_v1.jsonl";
  int items_per_condition = 20;
  uint64_t seed = 7;
  app.add_option("--out", out, "output JSONL path");
  app.add_option("--items", items_per_condition, "items per condition");
  app.add_option("--seed", seed, "generator seed");
  CLI11_PARSE(app, argc, argv);

  auto items = mcq::synth::bundled_dataset(items_per_condition, seed);
  mcq::save_dataset(out, items);
  std::printf("wrote %zu items to %s\n", items.size(), out.c_str());
  return 0;
}
