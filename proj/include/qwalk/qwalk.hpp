#pragma once

#include "qwalk/angles.hpp"
#include "qwalk/classical_walk.hpp"
#include "qwalk/classify.hpp"
#include "qwalk/closed_form.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/limit_dist.hpp"
#include "qwalk/quantum_walk.hpp"
#include "qwalk/serialize.hpp"
