#pragma once

#include "lcsb/bounds.hpp"
#include "lcsb/core.hpp"
#include "lcsb/enumerate.hpp"
#include "lcsb/generators.hpp"
#include "lcsb/oracle.hpp"
#include "lcsb/text.hpp"
#include "lcsb/verify.hpp"
