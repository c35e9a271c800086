#pragma once

#include "trigzero/certificate.hpp"
#include "trigzero/errors.hpp"
#include "trigzero/io.hpp"
#include "trigzero/montecarlo.hpp"
#include "trigzero/polynomial.hpp"
#include "trigzero/rational.hpp"
#include "trigzero/roots.hpp"
#include "trigzero/sturm.hpp"
#include "trigzero/trigpoly.hpp"
#include "trigzero/zerocount.hpp"
