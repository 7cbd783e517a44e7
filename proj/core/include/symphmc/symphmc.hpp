#pragma once

#include "symphmc/catalog.hpp"
#include "symphmc/errors.hpp"
#include "symphmc/flow.hpp"
#include "symphmc/fourth_order.hpp"
#include "symphmc/harmonic.hpp"
#include "symphmc/hmc.hpp"
#include "symphmc/parallel.hpp"
#include "symphmc/phase_state.hpp"
#include "symphmc/rng.hpp"
#include "symphmc/splitting.hpp"
#include "symphmc/targets.hpp"
#include "symphmc/tuner.hpp"
