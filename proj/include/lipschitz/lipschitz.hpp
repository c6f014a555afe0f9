// Umbrella header.
#pragma once

#include "lipschitz/dec_code.hpp"
#include "lipschitz/decode_report.hpp"
#include "lipschitz/metric.hpp"
#include "lipschitz/omec_code.hpp"
#include "lipschitz/oracle.hpp"
#include "lipschitz/quaternion.hpp"
#include "lipschitz/residue.hpp"
#include "lipschitz/text.hpp"
