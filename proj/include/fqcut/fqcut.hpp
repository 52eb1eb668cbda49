// Copyright 2026 The fqcut Authors
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

#include "fqcut/connectivity.hpp"
#include "fqcut/errors.hpp"
#include "fqcut/ex_oracle.hpp"
#include "fqcut/extremal.hpp"
#include "fqcut/graph_core.hpp"
#include "fqcut/lemma_suite.hpp"
#include "fqcut/min_cut.hpp"
#include "fqcut/partition_search.hpp"
