// Copyright 2026 The graphshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include "graphshare/access_structure.hpp"
#include "graphshare/coloring_share.hpp"
#include "graphshare/documents.hpp"
#include "graphshare/error.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/kgh.hpp"
#include "graphshare/oracle.hpp"
#include "graphshare/polly_cracker.hpp"
#include "graphshare/polynomial.hpp"
#include "graphshare/random.hpp"
#include "graphshare/vertex_types.hpp"
