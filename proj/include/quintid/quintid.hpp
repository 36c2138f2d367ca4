#pragma once

#include "quintid/alphabet.hpp"
#include "quintid/checksum.hpp"
#include "quintid/codec.hpp"
#include "quintid/error.hpp"
#include "quintid/generator.hpp"
#include "quintid/iri.hpp"
#include "quintid/random.hpp"
