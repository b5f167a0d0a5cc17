#pragma once

#include "parkhanoi/bijection.hpp"
#include "parkhanoi/budget.hpp"
#include "parkhanoi/enumeration.hpp"
#include "parkhanoi/error.hpp"
#include "parkhanoi/hanoi.hpp"
#include "parkhanoi/io.hpp"
#include "parkhanoi/parking.hpp"
#include "parkhanoi/search.hpp"
