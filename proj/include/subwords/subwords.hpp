#pragma once

// Umbrella header: everything needed to factorize words, compute universality
// indexes, and work with signatures of plain or SLP-compressed words.

#include "subwords/alphabet.hpp"
#include "subwords/arch.hpp"
#include "subwords/bignat.hpp"
#include "subwords/errors.hpp"
#include "subwords/indexes.hpp"
#include "subwords/latin1.hpp"
#include "subwords/signature.hpp"
#include "subwords/signature_json.hpp"
#include "subwords/slp.hpp"
#include "subwords/testkit.hpp"
#include "subwords/word.hpp"
