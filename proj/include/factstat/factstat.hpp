#pragma once

#include <factstat/rational.hpp>
#include <factstat/qpoly.hpp>
#include <factstat/partition.hpp>
#include <factstat/measures.hpp>
#include <factstat/lie_characters.hpp>
#include <factstat/class_function.hpp>
#include <factstat/stat_expr.hpp>
#include <factstat/stability.hpp>
#include <factstat/ffpoly.hpp>
#include <factstat/json_io.hpp>
#include <factstat/character_cache.hpp>
