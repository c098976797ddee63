#pragma once

#include "frieze_lab/error.hpp"
#include "frieze_lab/rational.hpp"
#include "frieze_lab/scalar.hpp"
#include "frieze_lab/plane.hpp"
#include "frieze_lab/jet.hpp"
#include "frieze_lab/frieze.hpp"
#include "frieze_lab/recurrence.hpp"
#include "frieze_lab/cluster_form.hpp"
#include "frieze_lab/taylor.hpp"
#include "frieze_lab/smooth.hpp"
#include "frieze_lab/continuum.hpp"
#include "frieze_lab/limit_bridge.hpp"
#include "frieze_lab/io.hpp"
