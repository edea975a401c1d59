#pragma once

#include "overpart/audit.hpp"
#include "overpart/bigint.hpp"
#include "overpart/bijections.hpp"
#include "overpart/enumerate.hpp"
#include "overpart/family.hpp"
#include "overpart/overpartition.hpp"
#include "overpart/qseries.hpp"
#include "overpart/selftest.hpp"
#include "overpart/serialize.hpp"
