#pragma once

#include "parastat/closed_forms.hpp"
#include "parastat/defining_rep.hpp"
#include "parastat/errors.hpp"
#include "parastat/factor_ratio.hpp"
#include "parastat/fock_module.hpp"
#include "parastat/gz_basis.hpp"
#include "parastat/isoscalar.hpp"
#include "parastat/radical.hpp"
#include "parastat/rational.hpp"
#include "parastat/reduced_elements.hpp"
#include "parastat/report.hpp"
#include "parastat/tableaux.hpp"
