/*
 *   Copyright 2026 the sgring authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "sgring/axioms.hpp"
#include "sgring/canonical_sum.hpp"
#include "sgring/cayley.hpp"
#include "sgring/errors.hpp"
#include "sgring/expr.hpp"
#include "sgring/formal_sum.hpp"
#include "sgring/fraction.hpp"
#include "sgring/lift.hpp"
#include "sgring/numbers.hpp"
#include "sgring/oracle/enumerate.hpp"
#include "sgring/oracle/polynomial.hpp"
#include "sgring/oracle/rewrite.hpp"
#include "sgring/random.hpp"
#include "sgring/sampling.hpp"
#include "sgring/semigroup.hpp"
