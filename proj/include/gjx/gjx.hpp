#pragma once

#include "gjx/arrangement.hpp"
#include "gjx/closed_form.hpp"
#include "gjx/determinant.hpp"
#include "gjx/engine.hpp"
#include "gjx/error.hpp"
#include "gjx/matrix.hpp"
#include "gjx/minors.hpp"
#include "gjx/random.hpp"
#include "gjx/rational.hpp"
#include "gjx/text_format.hpp"
