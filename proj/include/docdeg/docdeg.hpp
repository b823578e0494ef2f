// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "docdeg/cluster.hpp"
#include "docdeg/csv.hpp"
#include "docdeg/errors.hpp"
#include "docdeg/noise.hpp"
#include "docdeg/ols.hpp"
#include "docdeg/predict.hpp"
#include "docdeg/raster.hpp"
#include "docdeg/rng.hpp"
#include "docdeg/synthpage.hpp"
#include "docdeg/version.hpp"
