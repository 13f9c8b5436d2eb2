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

#ifndef NILKEX_NILKEX_HPP_
#define NILKEX_NILKEX_HPP_

#include "nilkex/error.hpp"
#include "nilkex/integer.hpp"
#include "nilkex/group.hpp"
#include "nilkex/presentation.hpp"
#include "nilkex/collector.hpp"
#include "nilkex/consistency.hpp"
#include "nilkex/commutator.hpp"
#include "nilkex/unitriangular.hpp"
#include "nilkex/cyclic.hpp"
#include "nilkex/standard_groups.hpp"
#include "nilkex/multilinear.hpp"
#include "nilkex/protocol.hpp"
#include "nilkex/cryptanalysis/psp.hpp"
#include "nilkex/cryptanalysis/ut_reduce.hpp"
#include "nilkex/cryptanalysis/pgroup.hpp"
#include "nilkex/cryptanalysis/safe_prime.hpp"
#include "nilkex/cryptanalysis/attack.hpp"

#endif  // NILKEX_NILKEX_HPP_
