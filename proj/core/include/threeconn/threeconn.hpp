#pragma once

/// Umbrella header: the whole public surface of the library.

#include "threeconn/audit.hpp"
#include "threeconn/bg_ops.hpp"
#include "threeconn/canonical.hpp"
#include "threeconn/connectivity.hpp"
#include "threeconn/degree_sequences.hpp"
#include "threeconn/graph.hpp"
#include "threeconn/graph6.hpp"
#include "threeconn/json_io.hpp"
#include "threeconn/oracle.hpp"
#include "threeconn/partition_matrix.hpp"
