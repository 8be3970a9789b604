#pragma once

#include "asw/catalog.hpp"
#include "asw/classify.hpp"
#include "asw/endo.hpp"
#include "asw/errors.hpp"
#include "asw/fingerprint.hpp"
#include "asw/galois.hpp"
#include "asw/isomorphism.hpp"
#include "asw/monomial.hpp"
#include "asw/polynomial.hpp"
#include "asw/presentation.hpp"
#include "asw/prime.hpp"
#include "asw/render.hpp"
#include "asw/report.hpp"
#include "asw/tower.hpp"
#include "asw/witt.hpp"
