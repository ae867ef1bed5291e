#pragma once

#include "qaseries/series.hpp"

namespace qaseries::detail {

// terms[e] += c, erasing the entry if it cancels to zero.
void accumulate(Series::TermMap& terms, const Expo& e, const Coeff& c);

}  // namespace qaseries::detail
