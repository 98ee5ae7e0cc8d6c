#pragma once

#include "bits.hpp"
#include "canon.hpp"
#include "census.hpp"
#include "classes.hpp"
#include "clawfree.hpp"
#include "contains.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "line_graphs.hpp"
#include "mock_threshold.hpp"
#include "report.hpp"
