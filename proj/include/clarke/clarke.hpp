#pragma once

#include "clarke/arc.hpp"
#include "clarke/clarke_matrix.hpp"
#include "clarke/geometry.hpp"
#include "clarke/io.hpp"
#include "clarke/pose.hpp"
#include "clarke/robot.hpp"
#include "clarke/types.hpp"
