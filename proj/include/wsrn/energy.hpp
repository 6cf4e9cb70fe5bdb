#ifndef WSRN_ENERGY_HPP
#define WSRN_ENERGY_HPP

#include <stdexcept>

#include "wsrn/robot.hpp"

namespace wsrn {

struct EnergyParams {
    double speed = 0.76;            // robot speed, m/s
    double coordinate_scale = 10.0; // meters per unit-square unit
    double initial_energy = 100.0;  // joules; 100 J makes 1 J == 1 %
};

// Movement cost in joules for d meters at constant speed.
inline double energy_loss(double d_meters, const EnergyParams& p) {
    return 6.25 * p.speed * d_meters + 9.79 * d_meters + 3.66 * d_meters / p.speed;
}

// Inclusive boundary: a robot with exactly the required energy can take the task.
inline bool can_afford(double robot_energy, double d_meters, const EnergyParams& p) {
    return robot_energy >= energy_loss(d_meters, p);
}

// Applies one task's travel to the robot. Throwing here means the allocation
// logic accepted a bidder it should not have.
inline void consume(Robot& r, double d_meters, const EnergyParams& p) {
    const double loss = energy_loss(d_meters, p);
    if (r.energy < loss) throw std::logic_error("insufficient energy for assigned task");
    r.energy -= loss;
    r.traveled += d_meters;
    r.reactions += 1;
}

}  // namespace wsrn

#endif  // WSRN_ENERGY_HPP
