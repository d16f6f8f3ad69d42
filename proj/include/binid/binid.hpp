#ifndef BINID_BINID_HPP
#define BINID_BINID_HPP

#include <binid/algebra.hpp>
#include <binid/dsl/ast.hpp>
#include <binid/dsl/expand.hpp>
#include <binid/dsl/lexer.hpp>
#include <binid/dsl/parser.hpp>
#include <binid/identities.hpp>
#include <binid/multipoly.hpp>
#include <binid/rational.hpp>
#include <binid/series.hpp>
#include <binid/verifier.hpp>

#endif
