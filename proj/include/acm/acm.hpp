#pragma once

#include "acm/catenary.hpp"
#include "acm/conjecture.hpp"
#include "acm/error.hpp"
#include "acm/factorization.hpp"
#include "acm/integer.hpp"
#include "acm/length_density.hpp"
#include "acm/monoid.hpp"
#include "acm/omega.hpp"
#include "acm/rational.hpp"
#include "acm/report.hpp"
#include "acm/survey.hpp"
#include "acm/union_find.hpp"
#include "acm/verify.hpp"
