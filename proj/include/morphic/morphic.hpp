#pragma once

#include "morphic/alphabet.hpp"
#include "morphic/caps.hpp"
#include "morphic/casestudies.hpp"
#include "morphic/errors.hpp"
#include "morphic/extremal.hpp"
#include "morphic/factor_corpus.hpp"
#include "morphic/factor_set.hpp"
#include "morphic/fixed_point.hpp"
#include "morphic/io.hpp"
#include "morphic/lazy_word.hpp"
#include "morphic/letter_classes.hpp"
#include "morphic/morphism.hpp"
#include "morphic/mx_checker.hpp"
#include "morphic/return_words.hpp"
#include "morphic/synthesizer.hpp"
