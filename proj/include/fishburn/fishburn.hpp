#pragma once

#include "fishburn/objects.hpp"
#include "fishburn/format.hpp"
#include "fishburn/patterns.hpp"
#include "fishburn/bijections.hpp"
#include "fishburn/statistics.hpp"
#include "fishburn/oracle.hpp"
#include "fishburn/verify.hpp"
