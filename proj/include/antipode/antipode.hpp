#pragma once

#include "antipode/constructions.hpp"
#include "antipode/cover.hpp"
#include "antipode/cover_io.hpp"
#include "antipode/face.hpp"
#include "antipode/search.hpp"
