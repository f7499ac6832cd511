// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "banach/axioms.hpp"
#include "banach/constants.hpp"
#include "banach/io.hpp"
#include "banach/norms.hpp"
#include "banach/oracle.hpp"
#include "banach/sequence.hpp"
#include "banach/theorems.hpp"
