// Copyright 2026 The halfguard Authors.
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

// Umbrella header.

#pragma once

#include "halfguard/error.hpp"
#include "halfguard/geom.hpp"
#include "halfguard/tree.hpp"
#include "halfguard/tri.hpp"
#include "halfguard/decomp.hpp"
#include "halfguard/guard.hpp"
#include "halfguard/smallcase.hpp"
#include "halfguard/place.hpp"
#include "halfguard/verify.hpp"
#include "halfguard/polygen.hpp"
#include "halfguard/io.hpp"
#include "halfguard/svg.hpp"
