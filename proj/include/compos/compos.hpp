#pragma once

#include "compos/colimit.hpp"
#include "compos/dsl.hpp"
#include "compos/error.hpp"
#include "compos/logic.hpp"
#include "compos/model.hpp"
#include "compos/names.hpp"
#include "compos/quotient.hpp"
#include "compos/simulator.hpp"
#include "compos/universal.hpp"
