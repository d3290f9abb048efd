#pragma once

#include "bellman.hpp"
#include "bench.hpp"
#include "cursor_deque.hpp"
#include "dominance.hpp"
#include "evaluator.hpp"
#include "instgen.hpp"
#include "io.hpp"
#include "linear.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "split.hpp"
