#pragma once

#include "coqla/adjoint.hpp"
#include "coqla/cycles.hpp"
#include "coqla/errors.hpp"
#include "coqla/io.hpp"
#include "coqla/matrix.hpp"
#include "coqla/oracle.hpp"
#include "coqla/rcdet.hpp"
#include "coqla/scalar.hpp"
#include "coqla/solve.hpp"
