// Copyright 2026 The nacost Authors
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

#pragma once

#include "nacost/catalog.hpp"
#include "nacost/cli.hpp"
#include "nacost/connectivity.hpp"
#include "nacost/error.hpp"
#include "nacost/nisq.hpp"
#include "nacost/quantity.hpp"
#include "nacost/report.hpp"
#include "nacost/rydberg.hpp"
#include "nacost/scenario.hpp"
#include "nacost/surface_code.hpp"
#include "nacost/transport.hpp"
#include "nacost/units.hpp"
