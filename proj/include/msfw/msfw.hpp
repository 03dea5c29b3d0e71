#pragma once

#include "cc_sampling.hpp"
#include "errors.hpp"
#include "exact_oracle.hpp"
#include "graph.hpp"
#include "msf_estimator.hpp"
#include "nonzero_sampler.hpp"
#include "phased_cc_estimator.hpp"
#include "random.hpp"
#include "replay.hpp"
#include "small_cc_counter.hpp"
#include "trace.hpp"
#include "union_find.hpp"
