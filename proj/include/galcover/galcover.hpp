#pragma once

#include "galcover/error.hpp"
#include "galcover/groups.hpp"
#include "galcover/cyclotomic.hpp"
#include "galcover/repr.hpp"
#include "galcover/covers.hpp"
#include "galcover/hodge.hpp"
#include "galcover/analyses.hpp"
#include "galcover/json_io.hpp"
