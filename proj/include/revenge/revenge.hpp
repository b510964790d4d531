#ifndef REVENGE_REVENGE_HPP
#define REVENGE_REVENGE_HPP

#include "revenge/counting.hpp"
#include "revenge/cube.hpp"
#include "revenge/cube_elem.hpp"
#include "revenge/geometry.hpp"
#include "revenge/numeric.hpp"
#include "revenge/oracle.hpp"
#include "revenge/perm.hpp"
#include "revenge/rng.hpp"
#include "revenge/sims.hpp"
#include "revenge/state_io.hpp"
#include "revenge/verify.hpp"
#include "revenge/wreath.hpp"

#endif // REVENGE_REVENGE_HPP
