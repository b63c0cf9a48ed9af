// Copyright 2026 The symprot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMPROT_SYMPROT_HPP_
#define SYMPROT_SYMPROT_HPP_

#include "symprot/dfs.hpp"
#include "symprot/entangle.hpp"
#include "symprot/fock.hpp"
#include "symprot/modes.hpp"
#include "symprot/permanent.hpp"
#include "symprot/protect.hpp"
#include "symprot/scatter.hpp"
#include "symprot/serialize.hpp"
#include "symprot/states.hpp"
#include "symprot/types.hpp"

#endif  // SYMPROT_SYMPROT_HPP_
