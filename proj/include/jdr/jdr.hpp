/*
   Copyright 2026 The jdr Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JDR_JDR_HPP
#define JDR_JDR_HPP

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "xrat.hpp"
#include "alpha_poly.hpp"
#include "determinant.hpp"
#include "problem.hpp"
#include "diff_tower.hpp"
#include "lodo.hpp"
#include "symmetric.hpp"
#include "powersum.hpp"
#include "elimination.hpp"
#include "log_bell.hpp"
#include "numeric.hpp"
#include "io.hpp"

#endif // JDR_JDR_HPP
