#pragma once

#include <kempe/certificate.hpp>
#include <kempe/codec.hpp>
#include <kempe/constructive.hpp>
#include <kempe/error.hpp>
#include <kempe/generators.hpp>
#include <kempe/graph.hpp>
#include <kempe/io.hpp>
#include <kempe/kempe.hpp>
#include <kempe/minors.hpp>
#include <kempe/solver.hpp>
#include <kempe/vertex_set.hpp>
#include <kempe/zmodel.hpp>
