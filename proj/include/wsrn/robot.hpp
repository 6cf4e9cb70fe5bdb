#ifndef WSRN_ROBOT_HPP
#define WSRN_ROBOT_HPP

#include <cstdint>

#include "wsrn/geometry.hpp"

namespace wsrn {

using NodeId = int;

// A mobile node. Ids are stable for the whole simulation; robots are never
// destroyed, only drained.
struct Robot {
    NodeId id = 0;
    Point pos;
    double energy = 0.0;   // joules of movement budget left
    double traveled = 0.0; // meters, cumulative
    int reactions = 0;     // tasks performed
    std::int64_t messages_sent = 0;
};

}  // namespace wsrn

#endif  // WSRN_ROBOT_HPP
