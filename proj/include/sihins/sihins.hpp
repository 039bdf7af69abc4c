#pragma once

#include "sihins/actuarial.hpp"
#include "sihins/config.hpp"
#include "sihins/continuous_analysis.hpp"
#include "sihins/discrete_analysis.hpp"
#include "sihins/errors.hpp"
#include "sihins/linalg.hpp"
#include "sihins/model.hpp"
#include "sihins/report.hpp"
#include "sihins/sensitivity.hpp"
#include "sihins/simulator.hpp"
