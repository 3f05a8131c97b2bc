#pragma once

#include "rsverify/exactalg/rational.hpp"
#include "rsverify/exactalg/vlaurent.hpp"
#include "rsverify/exactalg/sym_laurent.hpp"
#include "rsverify/exactalg/trunc_series.hpp"
#include "rsverify/exactalg/parse.hpp"
#include "rsverify/exactalg/serialize.hpp"
