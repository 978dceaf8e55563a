#ifndef FQK_FQK_HPP
#define FQK_FQK_HPP

#include "fqk/error.hpp"
#include "fqk/integer.hpp"
#include "fqk/perron.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/ordinary_quiver.hpp"
#include "fqk/module_category.hpp"
#include "fqk/quiver.hpp"
#include "fqk/coxeter.hpp"
#include "fqk/unfolding.hpp"
#include "fqk/quantum.hpp"
#include "fqk/reflection.hpp"
#include "fqk/catalog.hpp"
#include "fqk/io.hpp"

#endif  // FQK_FQK_HPP
