#ifndef WITTLANG_WITTLANG_HPP
#define WITTLANG_WITTLANG_HPP

#include "wittlang/errors.hpp"
#include "wittlang/gf.hpp"
#include "wittlang/matrix.hpp"
#include "wittlang/lgroup.hpp"
#include "wittlang/group_table.hpp"
#include "wittlang/subgrp.hpp"
#include "wittlang/hopf.hpp"
#include "wittlang/lang.hpp"
#include "wittlang/quasip.hpp"
#include "wittlang/covers.hpp"
#include "wittlang/io.hpp"

#endif  // WITTLANG_WITTLANG_HPP
