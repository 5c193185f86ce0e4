// Copyright 2026 The JSS Authors
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

#pragma once

#include "jss/conditions.hpp"
#include "jss/error.hpp"
#include "jss/io.hpp"
#include "jss/model.hpp"
#include "jss/numeric.hpp"
#include "jss/parallel.hpp"
#include "jss/random.hpp"
#include "jss/sim.hpp"
#include "jss/solver.hpp"
#include "jss/theorem_lab.hpp"
