#pragma once

#include "griesmer/bounds.hpp"
#include "griesmer/code.hpp"
#include "griesmer/errors.hpp"
#include "griesmer/json.hpp"
#include "griesmer/search.hpp"
#include "griesmer/theorems.hpp"
#include "griesmer/witness_file.hpp"
#include "griesmer/word.hpp"
