#pragma once

#include "quartic/cech.hpp"
#include "quartic/cech_fixture.hpp"
#include "quartic/error.hpp"
#include "quartic/fixtures.hpp"
#include "quartic/forms.hpp"
#include "quartic/integer.hpp"
#include "quartic/json_io.hpp"
#include "quartic/laurent_poly.hpp"
#include "quartic/linalg.hpp"
#include "quartic/oracle.hpp"
#include "quartic/random.hpp"
#include "quartic/rings.hpp"
#include "quartic/scan.hpp"
#include "quartic/sparse_poly.hpp"
#include "quartic/suites.hpp"
#include "quartic/universal.hpp"
