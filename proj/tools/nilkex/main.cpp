// Copyright 2026 The nilkex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace nilkex::cli;
  CLI::App app{"Commutator-based key exchange over nilpotent groups"};
  app.require_subcommand(1);

  CheckConfig check;
  auto* c = app.add_subcommand("check", "Check a nilpotent presentation file");
  c->add_option("presentation", check.path, "Presentation file")->required();
  c->add_option("--class", check.declared_class, "Nilpotency class to verify");

  ExchangeConfig ex;
  auto* e = app.add_subcommand("exchange", "Run an honest key exchange");
  e->add_option("--protocol", ex.protocol, "I or II")->check(CLI::IsMember({"I", "II"}));
  e->add_option("--platform", ex.platform, "Platform spec or .npres file")->required();
  e->add_option("--keys", ex.keys, "Comma-separated private exponents");
  e->add_option("--seed", ex.seed, "Seed for sampled keys");
  e->add_option("--bound", ex.bound, "Sampled keys lie in [-B, B] minus 0");
  e->add_option("--out", ex.out, "Transcript output path");

  AttackConfig at;
  auto* a = app.add_subcommand("attack", "Recover the shared key from a transcript");
  a->add_option("transcript", at.transcript, "Transcript file")->required();
  a->add_option("--solver", at.solver, "Power search solver")
      ->check(CLI::IsMember({"bruteforce", "bsgs", "ut-reduce", "pgroup-digits"}));
  a->add_option("--budget", at.budget, "Group multiplication budget");
  a->add_option("--bound", at.bound, "Scan limit for bruteforce");
  a->add_option("--out", at.out, "Attack report output path");

  BenchConfig be;
  std::string suites = "bsgs,ut-reduce";
  auto* b = app.add_subcommand("bench", "Operation counts for the solver ladders");
  b->add_option("--suite", suites, "Comma-separated suites (bsgs, ut-reduce); empty for none");
  b->add_option("--cap", be.cap, "Largest q exponent on the bsgs ladder")
      ->check(CLI::Range(10u, 40u));
  b->add_option("--seed", be.seed, "Seed");
  b->add_option("--out", be.out, "JSON output path");

  CLI11_PARSE(app, argc, argv);

  if (c->parsed()) return cmd_check(check, std::cout, std::cerr);
  if (e->parsed()) return cmd_exchange(ex, std::cout, std::cerr);
  if (a->parsed()) return cmd_attack(at, std::cout, std::cerr);
  be.suites.clear();
  std::istringstream in(suites);
  for (std::string s; std::getline(in, s, ',');) {
    if (!s.empty()) be.suites.push_back(s);
  }
  return cmd_bench(be, std::cout, std::cerr);
}
