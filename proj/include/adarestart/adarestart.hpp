#pragma once

#include "adarestart/core/check.hpp"
#include "adarestart/core/contraction.hpp"
#include "adarestart/core/phi.hpp"
#include "adarestart/core/point.hpp"
#include "adarestart/core/restart.hpp"
#include "adarestart/core/run.hpp"
#include "adarestart/core/trace.hpp"
#include "adarestart/harness/acceptance.hpp"
#include "adarestart/harness/active_set.hpp"
#include "adarestart/harness/config.hpp"
#include "adarestart/harness/experiment.hpp"
#include "adarestart/harness/search.hpp"
#include "adarestart/harness/verify.hpp"
#include "adarestart/io/instance_json.hpp"
#include "adarestart/io/libsvm.hpp"
#include "adarestart/io/trace_csv.hpp"
#include "adarestart/numerics/prox.hpp"
#include "adarestart/numerics/sparse.hpp"
#include "adarestart/numerics/spectral.hpp"
#include "adarestart/problems/bilinear.hpp"
#include "adarestart/problems/box_lp.hpp"
#include "adarestart/problems/hard_example.hpp"
#include "adarestart/problems/lower_bound.hpp"
#include "adarestart/problems/matrix_game.hpp"
#include "adarestart/problems/quadratic.hpp"
#include "adarestart/problems/random.hpp"
#include "adarestart/problems/regression.hpp"
#include "adarestart/saddle/contracts.hpp"
#include "adarestart/saddle/extragradient.hpp"
#include "adarestart/saddle/pdhg.hpp"
#include "adarestart/saddle/problem.hpp"
#include "adarestart/smooth/checks.hpp"
#include "adarestart/smooth/fista.hpp"
#include "adarestart/smooth/objective.hpp"
#include "adarestart/theory/bounds.hpp"
