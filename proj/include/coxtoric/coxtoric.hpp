#pragma once

#include "cone.hpp"
#include "fan.hpp"
#include "fan_io.hpp"
#include "fixtures.hpp"
#include "grading.hpp"
#include "hilbert.hpp"
#include "integer_matrix.hpp"
#include "models.hpp"
#include "monomial_ideal.hpp"
#include "numeric.hpp"
#include "polytope.hpp"
#include "report.hpp"
