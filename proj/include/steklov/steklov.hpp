#pragma once

#include "steklov/bounds.hpp"
#include "steklov/cap_galerkin.hpp"
#include "steklov/error.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/radial_steklov.hpp"
#include "steklov/spaceform.hpp"
#include "steklov/star_domain.hpp"
#include "steklov/steklov_result.hpp"
#include "steklov/sym_geneig.hpp"
#include "steklov/warped_profile.hpp"
