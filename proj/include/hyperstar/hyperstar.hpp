#pragma once

#include "hyperstar/errors.hpp"
#include "hyperstar/hypergraph.hpp"
#include "hyperstar/io.hpp"
#include "hyperstar/matrices.hpp"
#include "hyperstar/partition.hpp"
#include "hyperstar/reduction.hpp"
#include "hyperstar/report.hpp"
#include "hyperstar/spectral.hpp"
#include "hyperstar/stars.hpp"
