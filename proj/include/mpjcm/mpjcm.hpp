#ifndef MPJCM_MPJCM_HPP
#define MPJCM_MPJCM_HPP

#include "mpjcm/asymptotics.hpp"
#include "mpjcm/dynamics.hpp"
#include "mpjcm/envelope.hpp"
#include "mpjcm/errors.hpp"
#include "mpjcm/fock.hpp"
#include "mpjcm/numerics.hpp"
#include "mpjcm/observables.hpp"
#include "mpjcm/scenario.hpp"
#include "mpjcm/states.hpp"
#include "mpjcm/validation.hpp"
#include "mpjcm/wigner.hpp"

#endif  // MPJCM_MPJCM_HPP
