// Umbrella header.
#ifndef CREMONA_CREMONA_HPP
#define CREMONA_CREMONA_HPP

#include "cremona/catalog.hpp"
#include "cremona/cubes.hpp"
#include "cremona/entropy_value.hpp"
#include "cremona/errors.hpp"
#include "cremona/homog_poly.hpp"
#include "cremona/invariants.hpp"
#include "cremona/khk.hpp"
#include "cremona/lattice.hpp"
#include "cremona/linear_form.hpp"
#include "cremona/numeric.hpp"
#include "cremona/poly_gcd.hpp"
#include "cremona/proj_map.hpp"
#include "cremona/proj_point.hpp"
#include "cremona/rat_linalg.hpp"
#include "cremona/seqfit.hpp"
#include "cremona/singular.hpp"
#include "cremona/unipoly.hpp"

#endif
