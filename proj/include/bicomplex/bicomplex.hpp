#pragma once

#include "bicomplex/core.hpp"
#include "bicomplex/format.hpp"
#include "bicomplex/products.hpp"
#include "bicomplex/seqspec.hpp"
#include "bicomplex/series.hpp"
#include "bicomplex/transcendental.hpp"
