// Conversions between library types and the plain tables used by oracles.

#pragma once

#include "latinop/core.hpp"
#include "oracles.hpp"

#include <vector>

namespace support {

inline oracle::Table table_of(const latinop::RawOp& f)
{
    return oracle::Table(f.table().begin(), f.table().end());
}

inline oracle::Table table_of(const latinop::LatinOp& f)
{
    return table_of(f.raw());
}

inline latinop::RawOp raw(int n, int d, const oracle::Table& t)
{
    return latinop::RawOp::from_ints(n, d, t);
}

inline latinop::LatinOp latin(int n, int d, const oracle::Table& t)
{
    return latinop::LatinOp(raw(n, d, t));
}

inline latinop::LatinOp cyclic(int n, int d)
{
    return latin(n, d, oracle::cyclic(n, d));
}

}  // namespace support
