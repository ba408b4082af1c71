#pragma once

#include <lcflow/counter_rng.hpp>
#include <lcflow/curve.hpp>
#include <lcflow/error.hpp>
#include <lcflow/flow.hpp>
#include <lcflow/inequalities.hpp>
#include <lcflow/io.hpp>
#include <lcflow/spectral.hpp>
#include <lcflow/support_fourier.hpp>
