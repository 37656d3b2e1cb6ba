#pragma once

#include "closed_forms.hpp"
#include "complex_roots.hpp"
#include "enumerator.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "graph.hpp"
#include "serialization.hpp"
#include "svg_plot.hpp"
#include "polynomial.hpp"
#include "real_cert.hpp"
