#pragma once

#include "degseq/analysis_report.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"
#include "degseq/forced_sets.hpp"
#include "degseq/graph.hpp"
#include "degseq/graph_analysis.hpp"
#include "degseq/oracle.hpp"
#include "degseq/realize.hpp"
#include "degseq/rng.hpp"
