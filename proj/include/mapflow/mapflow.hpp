#pragma once

// Umbrella header for the mapflow library.

#include "mapflow/architecture.hpp"
#include "mapflow/csv.hpp"
#include "mapflow/dynamics.hpp"
#include "mapflow/errors.hpp"
#include "mapflow/format.hpp"
#include "mapflow/linalg.hpp"
#include "mapflow/metrics.hpp"
#include "mapflow/pca.hpp"
#include "mapflow/suite.hpp"
#include "mapflow/svg.hpp"
