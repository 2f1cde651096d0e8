#pragma once

#include "fibpow/classify.hpp"
#include "fibpow/error.hpp"
#include "fibpow/factor.hpp"
#include "fibpow/ff.hpp"
#include "fibpow/horadam.hpp"
#include "fibpow/json.hpp"
#include "fibpow/numtheory.hpp"
#include "fibpow/poly.hpp"
#include "fibpow/poly_io.hpp"
#include "fibpow/table.hpp"
