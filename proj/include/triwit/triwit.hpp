// Copyright 2026 The triwit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "triwit/criteria.hpp"
#include "triwit/dsl.hpp"
#include "triwit/explore.hpp"
#include "triwit/families.hpp"
#include "triwit/nelder_mead.hpp"
#include "triwit/ops.hpp"
#include "triwit/ptrans.hpp"
#include "triwit/space.hpp"
#include "triwit/states.hpp"
