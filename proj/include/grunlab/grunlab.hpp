#pragma once

#include "grunlab/errors.hpp"
#include "grunlab/quadrature.hpp"
#include "grunlab/profile.hpp"
#include "grunlab/integrals.hpp"
#include "grunlab/concavity.hpp"
#include "grunlab/bounds.hpp"
#include "grunlab/report.hpp"
#include "grunlab/functional.hpp"
#include "grunlab/body.hpp"
#include "grunlab/montecarlo.hpp"
#include "grunlab/sections.hpp"
#include "grunlab/search.hpp"
#include "grunlab/io.hpp"
