#pragma once

#include "astlab/bareiss.hpp"
#include "astlab/error.hpp"
#include "astlab/genfun.hpp"
#include "astlab/identities.hpp"
#include "astlab/json_io.hpp"
#include "astlab/laurent_poly.hpp"
#include "astlab/linkpat.hpp"
#include "astlab/monotone.hpp"
#include "astlab/numeric.hpp"
#include "astlab/oosasm.hpp"
#include "astlab/opcalc.hpp"
#include "astlab/poly_io.hpp"
#include "astlab/series_box.hpp"
#include "astlab/suite.hpp"
#include "astlab/triangles.hpp"
#include "astlab/verdict.hpp"
