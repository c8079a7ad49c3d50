#pragma once

#include "rsat/canonical.hpp"
#include "rsat/construct.hpp"
#include "rsat/enumerate.hpp"
#include "rsat/errors.hpp"
#include "rsat/family.hpp"
#include "rsat/graph.hpp"
#include "rsat/io.hpp"
#include "rsat/named_graphs.hpp"
#include "rsat/rainbow_detect.hpp"
#include "rsat/report.hpp"
#include "rsat/search.hpp"
#include "rsat/verify.hpp"
#include "rsat/version.hpp"
#include "rsat/vertex_set.hpp"
